import sys

from tilesub.cli.main import main

sys.exit(main(sys.argv[1:]))
