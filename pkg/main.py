"""Main entry point for the micro-DE experiment command line."""

import sys

from src.micro_de.cli import main

if __name__ == "__main__":
    sys.exit(main())
