from hubwalk.cli import main

main()
