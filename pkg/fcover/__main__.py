# -*- coding: utf-8 -*-

import sys

from fcover.entrypoint import main

if __name__ == "__main__":
    sys.exit(main())
