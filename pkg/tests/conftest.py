import pytest

import braidhom as bh


def s3_with_order_elements():
    """S3 plus a chosen 3-cycle c and transposition t."""
    g = bh.symmetric_group(3)

    def order(x):
        k, y = 1, x
        while y != g.unit:
            y = g.mul(y, x)
            k += 1
        return k

    c = min(x for x in range(6) if order(x) == 3)
    t = min(x for x in range(6) if order(x) == 2)
    return g, c, t


def s3_factorization():
    g, c, t = s3_with_order_elements()
    return bh.exact_factorization(g, [g.unit, c, g.mul(c, c)], [g.unit, t])


def c2_trivial_factorization():
    return bh.trivial_factorization(bh.cyclic_group(2))


def product_factorization(n, m):
    """H x K with H = Cn x 1 and K = 1 x Cm."""
    a, b = bh.cyclic_group(n), bh.cyclic_group(m)
    g = bh.direct_product(a, b)
    # direct_product enumerates pairs (x, y) with y fastest
    H = [x * m for x in range(n)]
    K = list(range(m))
    return bh.exact_factorization(g, H, K)


@pytest.fixture(scope="session")
def s3_fact():
    return s3_factorization()


@pytest.fixture(scope="session")
def c2_fact():
    return c2_trivial_factorization()


@pytest.fixture(scope="session")
def c2xc3_fact():
    return product_factorization(2, 3)


@pytest.fixture(scope="session")
def c2xc2_fact():
    return product_factorization(2, 2)


def small_catalog():
    """Idempotent catalog braidings with n <= 3, as (name, braided set)."""
    out = [
        ("identity:1", bh.identity_braiding(1)),
        ("identity:2", bh.identity_braiding(2)),
        ("identity:3", bh.identity_braiding(3)),
        ("minmax:2", bh.minmax_braiding(2)),
        ("minmax:3", bh.minmax_braiding(3)),
        ("fact:C2", c2_trivial_factorization().braiding),
        ("fact:C2xC2", product_factorization(2, 2).braiding),
    ]
    out.extend((f"size2:{tag}", bh.size2_family(tag)) for tag in bh.SIZE2_TAGS)
    return out


def full_catalog():
    """Catalog braidings up to n = 4 (plus the size-6 divisor lattice)."""
    out = small_catalog() + [
        ("identity:4", bh.identity_braiding(4)),
        ("minmax:4", bh.minmax_braiding(4)),
        ("boolean:4", bh.lattice_braiding(bh.boolean_lattice(2))),
        ("fact:S3", s3_factorization().braiding),
        ("fact:C2xC3", product_factorization(2, 3).braiding),
    ]
    return out
