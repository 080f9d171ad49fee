#!/usr/bin/env python3
"""Reference judge: ranks the requested ids in lexicographic order.

Reads one JSON request per line on stdin and answers with one JSON line,
which makes it a handy smoke test for the external judge protocol.
"""
import json
import sys

for line in sys.stdin:
    line = line.strip()
    if not line:
        continue
    request = json.loads(line)
    ids = sorted(c["id"] for c in request["candidates"])
    sys.stdout.write(json.dumps({"ranking": ids, "meta": None}) + "\n")
    sys.stdout.flush()
