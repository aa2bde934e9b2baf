"""Allow ``python -m carter_linkage``."""

import sys

from .cli import main

sys.exit(main())
