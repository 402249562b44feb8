"""Compare the numba and numpy modular rank kernels.

Random dense 0/1 matrices plus one real certificate matrix (a mod-2 basis
check from the term spaces). Usage: python3 benchmarks/bench_rank.py [--repeat R]
"""

import argparse
import time

import numpy as np

from oddcat._kernels import HAVE_NUMBA, densify, rank_mod_p_dense


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def certificate_matrix(n=4, m=3, l=2, k=2):
    from oddcat.crcomplex.terms import term_space

    sp = term_space(n, m, l, k)
    one = sp.model.one_a
    vecs = [{key[:3]: v for key, v in sp.flat(lab).items() if key[3] == one and v % 2} for lab in sp.labels]
    return densify(vecs)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--sizes", type=int, nargs="*", default=[50, 100, 200, 400])
    args = ap.parse_args()
    if not HAVE_NUMBA:
        print("numba unavailable (or ODDCAT_NO_NUMBA set); only the numpy path runs")
    rng = np.random.default_rng(0)
    cases = [(f"random {s}x{s}", rng.integers(0, 2, size=(s, s))) for s in args.sizes]
    cases.append(("term-space certificate", certificate_matrix()))
    if HAVE_NUMBA:
        rank_mod_p_dense(np.eye(2, dtype=np.int64), use_numba=True)  # compile outside the timings
    print(f"{'case':<26}{'shape':>12}{'rank':>7}{'numpy s':>11}{'numba s':>11}{'speedup':>9}")
    for name, mat in cases:
        t_np, r_np = best_of(lambda: rank_mod_p_dense(mat, use_numba=False), args.repeat)
        if HAVE_NUMBA:
            t_nb, r_nb = best_of(lambda: rank_mod_p_dense(mat, use_numba=True), args.repeat)
            assert r_nb == r_np, (name, r_nb, r_np)
            extra = f"{t_nb:>11.4f}{t_np / t_nb:>9.1f}"
        else:
            extra = f"{'-':>11}{'-':>9}"
        shape = f"{mat.shape[0]}x{mat.shape[1]}"
        print(f"{name:<26}{shape:>12}{r_np:>7}{t_np:>11.4f}{extra}")


if __name__ == "__main__":
    main()
