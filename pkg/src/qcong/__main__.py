import sys

from qcong.cli import main

sys.exit(main())
