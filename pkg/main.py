#!/usr/bin/env python3
"""
Run cremona-locus from a source checkout.

    python main.py bs "L3(15; 13,10,9,7,6,3^2,2)"
"""

import sys
from pathlib import Path

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).parent / "src"))

from cremona_locus.cli import main

if __name__ == "__main__":
    sys.exit(main())
