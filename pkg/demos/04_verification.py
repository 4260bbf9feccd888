"""Running the exhaustive checks and reading their reports."""

import json

from nilduality.verify import CHECK_IDS, describe, run_all, run_check

for cid in CHECK_IDS:
    print(f"{cid:>4}  {describe(cid)}")

reports = run_all(max_n=4, max_a_offset=2, jobs=2)
for r in reports:
    print(f"{r.id:>4} {r.instances:>6} instances, {r.failures} failures")

r = run_check("C14", 10)
print(json.dumps(r.to_dict(include_elapsed=False)))
