"""The ``wedgeent`` command, driven from Python.

Each subcommand prints one JSON document. ``--reproducible`` drops the
timestamp so repeated runs are byte-identical.
"""

import json
import os
import tempfile

from wedgeent.cli import run
from wedgeent.statefile import dump_state
from wedgeent.states import two_qutrit

with tempfile.TemporaryDirectory() as tmp:
    path = os.path.join(tmp, "state.json")
    dump_state(two_qutrit(a=1, q=1, z=1), path)
    with open(path) as fh:
        print("state file:\n" + fh.read())
    for argv in (
        ["--reproducible", "classify", "--state", path],
        ["--reproducible", "measure", "--state", path, "--mode", "literal"],
        ["--reproducible", "maximize", "--support", "00,11", "--seed", "7", "--restarts", "4"],
    ):
        print("$ wedgeent", " ".join(argv))
        code = run(argv)
        print("exit status", code, "\n")

    bad = os.path.join(tmp, "bad.json")
    with open(bad, "w") as fh:
        json.dump({"dims": [3, 3], "amplitudes": [{"index": [0, 0]}]}, fh)
    print("$ wedgeent classify --state bad.json")
    print("exit status", run(["classify", "--state", bad]))
