import os
import sys

# Allow `python main.py ...` from a checkout without installing the package
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from tilesub.cli.main import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
