"""Entry point for ``python -m ltl2aut``."""

import sys

from .cli import main

sys.exit(main())
