from lawsmith.cli import main

main()
