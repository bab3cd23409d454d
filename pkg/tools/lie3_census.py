"""Census of 3-dimensional restricted Lie algebras over GF(2) and their
compatibility with the unipotent automorphism z |-> z + y, x,y fixed.

Structures are tuples (brackets, squares) with brackets = ([x,y],[x,z],[y,z])
and squares = (x^[2], y^[2], z^[2]), each an element of F2^3 encoded as a
3-bit int (bit 0 = x, bit 1 = y, bit 2 = z).

Validity: Jacobi on (x,y,z) plus ad(v^[2]) = ad(v)^2 for basis v (the p-map
extends uniquely in char 2 via (u+v)^[2] = u^[2] + v^[2] + [u,v]).

sigma-compatibility (E = projection-to-z-coeff times y):
  E([x,y]) = 0,  E([y,z]) = 0,  E([x,z]) = [x,y],
  E(Qx) = 0,  E(Qy) = 0,  E(Qz) = Qy + [y,z].

Iso classes: orbits of GL3(F2); Hopf classes of the smash product: orbits of
the centralizer of sigma in GL3(F2).
"""

from itertools import product

VECS = range(8)


def bit(v, i):
    return (v >> i) & 1


def add(u, v):
    return u ^ v


def bracket_fn(br):
    # br = (xy, xz, yz); returns [u, v] for u, v in F2^3
    xy, xz, yz = br

    def b(u, v):
        r = 0
        # bilinear over F2, antisymmetric = symmetric in char 2, [v,v]=0
        ux, uy, uz = bit(u, 0), bit(u, 1), bit(u, 2)
        vx, vy, vz = bit(v, 0), bit(v, 1), bit(v, 2)
        if (ux & vy) ^ (uy & vx):
            r ^= xy
        if (ux & vz) ^ (uz & vx):
            r ^= xz
        if (uy & vz) ^ (uz & vy):
            r ^= yz
        return r

    return b


def square_fn(br, sq):
    b = bracket_fn(br)
    qx, qy, qz = sq

    def q(v):
        # (ax+by+cz)^[2] = a^2 qx + b^2 qy + c^2 qz + ab[x,y] + ac[x,z] + bc[y,z]
        a, c2, c3 = bit(v, 0), bit(v, 1), bit(v, 2)
        r = 0
        if a:
            r ^= qx
        if c2:
            r ^= qy
        if c3:
            r ^= qz
        if a & c2:
            r ^= br[0]
        if a & c3:
            r ^= br[1]
        if c2 & c3:
            r ^= br[2]
        return r

    return q


def ad_matrix(b, v):
    # columns: image of x, y, z under [v, .]
    return tuple(b(v, w) for w in (1, 2, 4))


def mat_apply(m, v):
    r = 0
    for i in range(3):
        if bit(v, i):
            r ^= m[i]
    return r


def mat_mul(m, n):
    return tuple(mat_apply(m, n[i]) for i in range(3))


def is_valid(br, sq):
    b = bracket_fn(br)
    # Jacobi
    j = b(b(1, 2), 4) ^ b(b(2, 4), 1) ^ b(b(4, 1), 2)
    if j:
        return False
    # ad(v^[2]) = ad(v)^2 on basis
    for v, q in zip((1, 2, 4), sq):
        adv = ad_matrix(b, v)
        if ad_matrix(b, q) != mat_mul(adv, adv):
            return False
    return True


def sigma_compatible(br, sq):
    xy, xz, yz = br
    qx, qy, qz = sq
    if bit(xy, 2) or bit(yz, 2) or bit(qx, 2) or bit(qy, 2):
        return False
    # E(v) = (z-coeff of v) * y
    if (2 if bit(xz, 2) else 0) != xy:
        return False
    if (2 if bit(qz, 2) else 0) != (qy ^ yz):
        return False
    return True


def gl3():
    mats = []
    for m in product(VECS, repeat=3):
        # invertible iff columns span
        span = {0}
        for c in m:
            span |= {s ^ c for s in span}
        if len(span) == 8:
            mats.append(m)
    return mats


def transport(m, minv, br, sq):
    # new structure in basis e_i' = m(e_i): [u,v]' = minv([m u, m v]) etc.
    b = bracket_fn(br)
    q = square_fn(br, sq)
    nb = tuple(
        mat_apply(minv, b(mat_apply(m, u), mat_apply(m, v)))
        for u, v in ((1, 2), (1, 4), (2, 4))
    )
    nq = tuple(mat_apply(minv, q(mat_apply(m, v))) for v in (1, 2, 4))
    return nb, nq


def invert(m):
    for n in GL:
        if mat_mul(m, n) == (1, 2, 4):
            return n
    raise ValueError


GL = gl3()
print(f"|GL3(F2)| = {len(GL)}")
INV = {m: invert(m) for m in GL}
SIGMA = (1, 2, 2 ^ 4)  # x->x, y->y, z->z+y
CENT = [m for m in GL if mat_mul(m, SIGMA) == mat_mul(SIGMA, m)]
print(f"|centralizer(sigma)| = {len(CENT)}")

valid = [
    (br, sq)
    for br in product(VECS, repeat=3)
    for sq in product(VECS, repeat=3)
    if is_valid(br, sq)
]
print(f"valid restricted Lie structures: {len(valid)}")

# partition into GL-orbits (abstract iso classes)
seen = {}
classes = []
for s in valid:
    if s in seen:
        continue
    orb = set()
    for m in GL:
        t = transport(m, INV[m], *s)
        orb.add(t)
    for t in orb:
        seen[t] = len(classes)
    classes.append(sorted(orb))
print(f"abstract iso classes: {len(classes)}")

NAMES = {}


def rels_of(br, sq):
    # human-readable relation list
    def term(v):
        return "+".join(n for i, n in enumerate("xyz") if bit(v, i)) or "0"

    out = []
    for lbl, v in zip(("[x,y]", "[x,z]", "[y,z]"), br):
        out.append(f"{lbl}={term(v)}")
    for lbl, v in zip(("x2", "y2", "z2"), sq):
        out.append(f"{lbl}={term(v)}")
    return ", ".join(out)


# printed items (109)-(122) as structures, in catalog order
PRINTED_TRIV = {
    109: ((0, 0, 0), (0, 0, 0)),
    110: ((0, 0, 0), (1, 2, 4)),
    111: ((0, 0, 0), (2, 4, 0)),
    112: ((0, 0, 0), (0, 4, 0)),
    113: ((0, 0, 0), (0, 0, 4)),
    114: ((0, 0, 0), (0, 2, 4)),
    115: ((0, 0, 0), (2, 0, 4)),
    116: ((4, 0, 0), (0, 0, 0)),
    117: ((4, 0, 0), (0, 0, 4)),
    118: ((2, 0, 0), (1, 0, 0)),
    119: ((2, 0, 0), (1, 4, 0)),
    120: ((2, 0, 0), (1, 0, 4)),
    121: ((2, 0, 0), (1, 4, 4)),
    122: ((0, 1, 2), (0, 0, 4)),
}
# printed items (184)-(197): same structures, sigma now in play
PRINTED_UNIP = {184 + k - 109: v for k, v in PRINTED_TRIV.items()}

for item, s in PRINTED_TRIV.items():
    if not is_valid(*s):
        print(f"  printed ({item}) INVALID as restricted Lie algebra")
        continue
    NAMES[seen[s]] = item
print(f"printed trivial-action items cover {len(set(NAMES.values()))} classes")

print()
print("=== sigma-compatibility census per abstract class ===")
for ci, orb in enumerate(classes):
    compat = [s for s in orb if sigma_compatible(*s)]
    # Hopf classes: orbits of CENT on compat
    hopf = []
    done = set()
    for s in compat:
        if s in done:
            continue
        o = set()
        for m in CENT:
            o.add(transport(m, INV[m], *s))
        done |= o
        hopf.append(sorted(o)[0])
    twin = NAMES.get(ci, "?")
    item = 184 + (twin - 109) if isinstance(twin, int) else "?"
    pr = PRINTED_UNIP.get(item)
    pr_ok = pr in compat if pr else None
    print(
        f"class #{ci} (triv twin {twin}, unip item {item}): |orbit|={len(orb)}"
        f" compat reps={len(compat)} hopf classes={len(hopf)} printed-ok={pr_ok}"
    )
    for h in hopf:
        mark = " <= printed" if pr and h in {
            transport(m, INV[m], *pr) for m in CENT
        } else ""
        print(f"    {rels_of(*h)}{mark}")
