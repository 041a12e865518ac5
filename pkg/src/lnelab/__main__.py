from lnelab.cli.main import main

main()
