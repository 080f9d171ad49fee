#!/usr/bin/env python3
"""Logs the attempt number of each request to argv[1] and replies with prose."""
import json
import sys

log_path = sys.argv[1]
for line in sys.stdin:
    request = json.loads(line)
    with open(log_path, "a") as log:
        log.write(f"{request['iteration']} {request['attempt']}\n")
    sys.stdout.write("Candidate one seems strongest overall.\n")
    sys.stdout.flush()
