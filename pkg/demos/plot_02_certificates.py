"""
Non-generation certificates
===========================

For each m we exhibit a unit vector e_l with its first m coordinates zero
whose image under some power of the operator has a nonzero first
coordinate. That rules out every m, so the operator cannot generate a
strongly continuous semigroup.
"""

from omegalap import build_instance, certificate, emit_certificate, verify_certificate

# alpha Id + beta L on the ray with weights 1/deg(v)
g, op = build_instance({"family": "ray"}, "normalized", alpha="0", beta="1")
for m in range(1, 7):
    c = certificate(g, op, m)
    print(f"m={c.m}: l={c.l}, k={c.k}, ((D-B)^k)_(1,l) = {c.value}")

# on the ray the value is (-1)^m / 2^(m-1): one shortest walk, weights 1, 1/2, 1/2, ...

# the same for a Gaussian rational instance on the lattice
g, op = build_instance({"family": "grid2d"}, "uniform", alpha="i", beta="1+i", field="gaussian")
doc = emit_certificate(g, op, range(1, 11))
for row in doc["rows"]:
    print(row)
print("independent re-check:", verify_certificate(doc) or "ok")

# tampering is caught
doc["rows"][3]["value"] = "0"
print("after tampering:", verify_certificate(doc))
