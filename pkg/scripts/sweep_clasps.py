#!/usr/bin/env python3
"""Sweep the Brunnian clasp family: geometric value versus the oracle.

Usage: sweep_clasps.py [max_k]   (default 4)
"""

import sys
import time

from masseylink.fixtures import clasp_family
from masseylink.magnus import milnor_mu
from masseylink.massey import massey3


def main():
    max_k = int(sys.argv[1]) if len(sys.argv) > 1 else 4
    print("  k  crossings  massey3(1,2,3)  mu(1,2,3)  time")
    for k in range(1, max_k + 1):
        d = clasp_family(k)
        t0 = time.time()
        r = massey3(d, (1, 2, 3))
        dt = time.time() - t0
        mu = milnor_mu(d, (1, 2, 3))
        flag = "" if abs(r.value) == abs(mu) else "  MISMATCH"
        print("%3d  %9d  %14d  %9d  %4.1fs%s"
              % (k, len(d.crossings), r.value, mu, dt, flag))


if __name__ == "__main__":
    main()
