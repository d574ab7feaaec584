from ramsey_forge.cli import main

main()
