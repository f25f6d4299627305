import sys

from harmonic_cert.cli import main

sys.exit(main())
