#!/usr/bin/env python3
"""
Run the chainreach CLI from a source checkout: python run.py <command> ...
"""
import sys

from src.main import main

if __name__ == "__main__":
    sys.exit(main())
