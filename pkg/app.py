#!/usr/bin/env python3
"""
Moduli classifier command-line entry point.

Run `python app.py --help` for the subcommands.
"""

import sys
import os

# Add the project root to the path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from cli.main import main


if __name__ == "__main__":
    sys.exit(main())
