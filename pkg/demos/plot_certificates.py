"""
Writing and replaying certificates
==================================

Each experiment can be frozen into a JSON file holding its inputs and its
outputs.  Replaying recomputes the outputs from the inputs and compares.
"""

import json
import tempfile
from pathlib import Path

from cifano.certify import make_certificate, verify_certificate, write_certificate
from cifano.invariants import Parameters

params = Parameters(3, 1, (4,))
cert = make_certificate("rigidity", params, 1009, seed=7)
print("rank", cert.payload["rank"], "rigid", cert.payload["is_rigid"])

with tempfile.TemporaryDirectory() as tmp:
    path = write_certificate(cert, Path(tmp) / "demo.fanocert.json")
    print(verify_certificate(path))

    ##########################################################################
    # Tampering with a stored output is caught, and the path of the changed
    # field is reported.
    data = json.loads(path.read_text())
    data["payload"]["rank"] -= 1
    path.write_text(json.dumps(data))
    print(verify_certificate(path))
