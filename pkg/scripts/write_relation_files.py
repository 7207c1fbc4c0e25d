"""Write the built-in relations as relation documents under data/relations/."""

import json
from pathlib import Path

from blockdepth.relations import CUSP_BLOCK_RELATION, EXAMPLE_RELATIONS, corollary_262_sides, relation_document

out = Path(__file__).resolve().parents[1] / "data" / "relations"
out.mkdir(parents=True, exist_ok=True)

for name, (RB, RD, r, W) in EXAMPLE_RELATIONS.items():
    (out / f"{name}.json").write_text(json.dumps(relation_document(RB, RD, r, W), indent=2) + "\n")

RB, RD = corollary_262_sides(4, 1)
doc = relation_document(RB, [(z, c / 16) for z, c in RD], 4, 14)
(out / "corollary-262-n4-a1.json").write_text(json.dumps(doc, indent=2) + "\n")

# block side only: it must vanish against the even algebra, so the depth side is empty
doc = relation_document(CUSP_BLOCK_RELATION, {}, 2, 12)
(out / "cusp-block-weight-12.json").write_text(json.dumps(doc, indent=2) + "\n")
print("\n".join(sorted(p.name for p in out.iterdir())))
