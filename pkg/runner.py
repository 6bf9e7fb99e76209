"""Main app entrypoint. Runs the simulator command line."""

import sys

from qsl.runners.cli import main

if __name__ == "__main__":
    sys.exit(main())
