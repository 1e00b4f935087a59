# -*- coding: utf-8 -*-

import sys
from pathlib import Path

# Run from a source checkout without installing the package.
sys.path.append(str(Path(__file__).resolve().parent))

from fcover.entrypoint import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
