# Copyright 2026 mctsynth authors.
# See LICENSE file for licensing details.

"""Entry point for `python -m mctsynth`."""

import sys

from mctsynth.cli import main

sys.exit(main())
