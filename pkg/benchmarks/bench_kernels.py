"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Both backends are imported directly, so the result does not depend on
``NATREES_PURE_PYTHON``.
"""

import argparse
import random
import timeit

from natrees import _pykernels as python_backend
from natrees import gallery
from natrees.nat import _ancestor_positions
from natrees.perm import extract_sigma
from natrees.trees import parse_tree

try:
    from natrees import _kernels as compiled_backend
except ImportError:
    compiled_backend = None


def workloads():
    # brute-force labelling of two shapes (7! * 3! and 3! * 4! candidates)
    shapes = [
        parse_tree("(((((((. .) .) (. .)) .) ((. .) .)) .) (. .))"),
        gallery.QHOOK_SHAPE,
    ]
    ancs = [_ancestor_positions(s) for s in shapes]
    rng = random.Random(1)
    perms = [tuple(rng.sample(range(1, 13), 12)) for _ in range(2000)]
    perms += list(extract_sigma(gallery.EX22_NAT))
    return {
        "brute_force_labellings": lambda k: [k.brute_force_labellings(l, r) for l, r in ancs],
        "valid_labellings": lambda k: [k.valid_labellings(l) for l, _ in ancs],
        "inversions": lambda k: [k.inversions(p) for p in perms],
        "imaj": lambda k: [k.imaj(p) for p in perms],
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    backends = {"python": python_backend}
    if compiled_backend is not None:
        backends["cython"] = compiled_backend
    else:
        print("compiled extension not built; timing the Python backend only")
    print(f"{'kernel':<24}" + "".join(f"{name:>12}" for name in backends) + ("     speed-up" if len(backends) == 2 else ""))
    for name, work in workloads().items():
        if len(backends) == 2:
            assert work(python_backend) == work(compiled_backend), name
        times = {b: min(timeit.repeat(lambda: work(k), number=1, repeat=args.repeat)) for b, k in backends.items()}
        row = f"{name:<24}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times.values())
        if len(times) == 2:
            row += f"{times['python'] / times['cython']:>12.1f}x"
        print(row)


if __name__ == "__main__":
    main()
