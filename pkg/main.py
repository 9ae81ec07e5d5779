"""
LG Toolkit - Main entry point.
Compactification combinatorics of toric Landau-Ginzburg models.
"""

from cli import main

if __name__ == "__main__":
    main()
