"""Regenerate the JSON diagrams shipped in src/yamada_skein/data/."""
from pathlib import Path

from yamada_skein import corpus as C

OUT = Path(__file__).resolve().parents[1] / "src" / "yamada_skein" / "data"

# pentagram crossings in discovery order: chords (0,1), (0,4), (1,2), (2,3), (3,4);
# chord k is the inner edge (5+k, 5+(k+2)%5)
PETERSEN_OVER = (0, 0, 0, 1, 0)
PETERSEN_SYMMETRIC_OVER = (0, 1, 0, 0, 0)


def main():
    OUT.mkdir(exist_ok=True)
    files = {
        "circle": C.free_circle(),
        "theta": C.theta_graph(3),
        "trefoil": C.trefoil(),
        "hopf": C.hopf_link(),
        "k4": C.k4(),
        "petersen": C.petersen(PETERSEN_OVER),
        "petersen_symmetric": C.petersen(PETERSEN_SYMMETRIC_OVER),
        "core_circle": C.core_circle(),
    }
    for n in range(1, 4):
        files[f"b{n}"] = C.bouquet(n)
        files[f"S{n}"] = C.s_n(n)
        files[f"theta_{n + 1}"] = C.theta_n(n + 1)
    for name, d in files.items():
        (OUT / f"{name}.json").write_text(d.to_json(indent=None) + "\n")
    tangles = {
        "tangle_crossing": C.tangle_from_word(2, [("X", 0, 1)]),
        "tangle_vertex": C.tangle_from_word(2, [("H", 0), ("X", 0, -1)]),
    }
    for name, t in tangles.items():
        (OUT / f"{name}.json").write_text(t.to_json() + "\n")
    print(f"wrote {len(files) + len(tangles)} files to {OUT}")


if __name__ == "__main__":
    main()
