"""
Truncated exponentials of finite sections
=========================================

Row 1 of the Taylor polynomial of exp(t A_N) on the uniform ray. As soon as
the degree reaches the size of the section, coordinate 1 depends on every
coordinate of the section, however large N is.
"""

import warnings

from omegalap import Ray, build_laplacian, truncated_exponential_row

_, pair = build_laplacian(Ray(), "uniform")

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    for terms in (0, 2, 8, 40):
        report = truncated_exponential_row(pair, 32, 1, terms)
        print(f"terms={terms:2d}: {report.nonzero_count} of {report.N} entries nonzero")

report = truncated_exponential_row(pair, 6, 1, 12)
for j, v in enumerate(report.row1, start=1):
    print(j, v, float(v))
