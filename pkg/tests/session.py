"""The documented CLI session: commands and how to replay them."""

import shlex
import subprocess
import sys
from pathlib import Path

from conftest import CUBIC, SURFACE, QUAD4_F2, QUAD4_F3

GOLDEN = Path(__file__).parent / "golden" / "session.txt"

COMMANDS = [
    ["nessvar", CUBIC, "--vars", "x,y,z"],
    ["essvar", CUBIC, "--vars", "x,y,z"],
    ["newpres", CUBIC, "--vars", "x,y,z", "--basis", "y+z,x-z"],
    ["essvar", QUAD4_F2, "--vars", "x,y,z,t"],
    ["newpres", QUAD4_F2, "--vars", "x,y,z,t", "--basis", "x+y-2z-3t"],
    ["essvar", QUAD4_F3, "--vars", "x,y,z,t"],
    ["newpres", QUAD4_F3, "--vars", "x,y,z,t", "--basis", "x+y-2z-3t"],
    ["nessvar", SURFACE, "--vars", "x,y,z"],
    ["essvar", SURFACE, "--vars", "x,y,z"],
    ["newpres", SURFACE, "--vars", "x,y,z", "--basis", "t,y+2/3z,x+1/3z"],
    ["cylinder", SURFACE, "--vars", "x,y,z"],
]


def run_cli(args, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "essvars", *args], input=stdin, capture_output=True, text=True
    )


def transcript() -> str:
    chunks = []
    for args in COMMANDS:
        proc = run_cli(args)
        chunks.append("$ essvars " + shlex.join(args) + "\n" + proc.stdout)
    return "".join(chunks)


if __name__ == "__main__":
    GOLDEN.write_text(transcript())
