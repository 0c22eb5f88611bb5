"""Main entry point for the rumor-dynamics command line.

Examples:
    python main.py simulate --scenario fig2 --out out/fig2
    python main.py equilibria --rho1 0.4 --rho2 0.8 --n 11
    python main.py verify-integral --model belen-pearce-planar --variant paper
    python main.py sweep --scenario fig2 --workers 4
"""

import sys

from src.cli import main


if __name__ == "__main__":
    sys.exit(main())
