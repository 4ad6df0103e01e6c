#!/usr/bin/env python3
# Copyright 2026 The condlo Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Independent oracle for the frozen constants in the C++ test suites.

Amplitudes are computed by brute-force permanents over all permutations
(no Ryser, no creation-operator expansion), so nothing here shares a code
path with the library.
"""
import itertools
import math

import numpy as np


def perm_brute(a):
    n = a.shape[0]
    return sum(np.prod([a[i, p[i]] for i in range(n)])
               for p in itertools.permutations(range(n))) if n else 1.0


def amplitude(u, occ_in, occ_out):
    if sum(occ_in) != sum(occ_out):
        return 0.0
    rows = [m for m, c in enumerate(occ_in) for _ in range(c)]
    cols = [m for m, c in enumerate(occ_out) for _ in range(c)]
    sub = np.conj(u)[np.ix_(rows, cols)]
    norm = math.sqrt(np.prod([math.factorial(c) for c in occ_in]) *
                     np.prod([math.factorial(c) for c in occ_out]))
    return perm_brute(sub) / norm


def sector(modes, n):
    if modes == 1:
        yield (n,)
        return
    for k in range(n + 1):
        for rest in sector(modes - 1, n - k):
            yield (k,) + rest


def main():
    print("sector(12,6) =", sum(1 for _ in sector(12, 6)))

    bs = np.array([[1, 1], [1, -1]]) / math.sqrt(2)
    print("HOM <1,1|U|1,1> =", amplitude(bs, (1, 1), (1, 1)))
    print("HOM <2,0|U|1,1> =", amplitude(bs, (1, 1), (2, 0)))
    print("HOM <0,2|U|1,1> =", amplitude(bs, (1, 1), (0, 2)))

    r2 = math.sqrt(2)
    klm = np.array([
        [1 - r2, 2 ** -0.25, math.sqrt(3 / r2 - 2)],
        [2 ** -0.25, 0.5, 0.5 - 1 / r2],
        [math.sqrt(3 / r2 - 2), 0.5 - 1 / r2, r2 - 0.5],
    ])
    print("KLM unitarity dev =", np.abs(klm @ klm.conj().T - np.eye(3)).max())
    # Input modes (1,2,3); output (a,b,c); ancilla one photon in mode 2;
    # success = one photon in b, none in c.
    diag = []
    for n in range(4):
        amp = amplitude(klm, (n, 1, 0), (n, 1, 0))
        diag.append(amp)
        print(f"KLM <{n}bar,1_b,0_c|U|{n},1_2,0_3> = {amp!r}  |.|^2 = {abs(amp)**2!r}")
    print("(2*sqrt2-5/2)^2 =", (2 * r2 - 2.5) ** 2)
    print("KLM extended spread =", 0.25 - abs(diag[3]) ** 2)
    # Off-diagonal leakage: success with n in, m != n out must vanish.
    leak = max(abs(amplitude(klm, (n, 1, 0), (m, 1, 0)))
               for n in range(4) for m in range(4) if m != n)
    print("KLM off-diagonal max =", leak)

    # Uncorrected CNOT family: sign pattern per outcome (p,q,n,m bits,
    # F=+1, S=-1). Rows are vec(w_L) of diag-permutation matrices.
    rows = []
    for bits in itertools.product([0, 1], repeat=4):
        sp, sq, sn, sm = [1 - 2 * b for b in bits]
        signs = [1, -sn * sm, -sp * sq, sp * sq * sn * sm]
        rows.append(signs)
    sv = np.linalg.svd(np.array(rows, dtype=float), compute_uv=False)
    print("CNOT uncorrected sigma2/sigma1 =", sv[1] / sv[0])


if __name__ == "__main__":
    main()
