#!/usr/bin/env python3
"""Skeleton for an LLM-backed judge.

Replace `rank_candidates` with a call to your model. The engine sends

  {"type": "rank", "iteration": int, "attempt": int, "rubric": str | null,
   "prior_ordering": [ids] | null,
   "candidates": [{"id": str, "label": str, "dossier": str | null}, ...]}

and expects exactly one line back:

  {"ranking": [ids, strongest first], "meta": str | null}

The ranking must be a permutation of the request ids. Invalid replies are
retried with the same request and a higher "attempt" value.
"""
import json
import sys


def rank_candidates(request):
    # Placeholder: keep the order the engine presented.
    return [c["id"] for c in request["candidates"]]


def main():
    for line in sys.stdin:
        line = line.strip()
        if not line:
            continue
        request = json.loads(line)
        reply = {"ranking": rank_candidates(request), "meta": None}
        sys.stdout.write(json.dumps(reply) + "\n")
        sys.stdout.flush()


if __name__ == "__main__":
    main()
