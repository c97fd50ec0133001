"""Run the command-line tool and check its exit status and output.

usage: run_cli.py EXIT_CODE PATTERN -- COMMAND...
PATTERN is a regular expression searched in stdout+stderr; "-" skips it.
"""

import re
import subprocess
import sys


def main(argv):
    split = argv.index("--")
    expected_exit, pattern = int(argv[1]), argv[2]
    command = argv[split + 1:]
    proc = subprocess.run(command, capture_output=True, text=True)
    output = proc.stdout + proc.stderr
    if proc.returncode != expected_exit:
        print(output)
        print(f"exit status {proc.returncode}, expected {expected_exit}")
        return 1
    if pattern != "-" and not re.search(pattern, output, re.MULTILINE):
        print(output)
        print(f"pattern not found: {pattern}")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
