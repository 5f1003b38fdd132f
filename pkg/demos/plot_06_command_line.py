"""
The command line
================

The same operations through ``python -m filippov``.
Exit codes: 0 fine, 1 violations or an anomaly, 2 bad input.
"""

import subprocess
import sys
from pathlib import Path

data = Path(__file__).parent / "data"


def run(*args):
    r = subprocess.run([sys.executable, "-m", "filippov", *args], capture_output=True, text=True)
    print("$ filippov", " ".join(args), "  -> exit", r.returncode)
    print((r.stdout or r.stderr)[:400])


run("check", str(data / "vector_product4.json"))
run("module", "--m", "1", "--n", "2", "--lambda", "1,0,0,0", "--parity", "even")
run("module", "--m", "1", "--n", "2", "--lambda", "1,0,-1,0")
run("triple", "--lie", str(data / "so3_split.json"), "--module", str(data / "so3_natural.json"), "--arity", "2")
run("scan", "--config", str(data / "so4_control.conf"))
run("scan", "--config", str(data / "a12_slice.conf"), "--out", "/tmp/a12_scan.json")
