"""The generator must be bit-exact against an independent transcription
of the documented algorithm, or cross-language reproducibility claims
are void."""

from boolwidth.rng import XorShift64Star

M = (1 << 64) - 1


def _splitmix(x):
    x = (x + 0x9E3779B97F4A7C15) & M
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & M
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & M
    return z ^ (z >> 31), x


def _reference(seed, k):
    s, carry = _splitmix(seed & M)
    while s == 0:
        s, carry = _splitmix(carry)
    out = []
    for _ in range(k):
        s ^= s >> 12
        s &= M
        s ^= (s << 25) & M
        s ^= s >> 27
        out.append((s * 0x2545F4914F6CDD1D) & M)
    return out


def test_known_streams():
    # first words for three seeds, frozen from the reference above
    assert _reference(0, 1)[0] == 0x7BBCB40D550682D0
    assert _reference(1, 1)[0] == 0x4B46A55DF3611B9B
    assert _reference(0xDEADBEEF, 1)[0] == 0xFED17E15C5A0394F
    for seed in (0, 1, 7, 0xDEADBEEF, (1 << 64) - 1):
        r = XorShift64Star(seed)
        assert [r.next_u64() for _ in range(50)] == _reference(seed, 50)


def test_same_seed_same_stream():
    a = XorShift64Star(42)
    b = XorShift64Star(42)
    assert [a.next_u64() for _ in range(10)] == [b.next_u64() for _ in range(10)]


def test_random_unit_interval():
    r = XorShift64Star(3)
    vals = [r.random() for _ in range(1000)]
    assert all(0.0 <= v < 1.0 for v in vals)
    assert len(set(vals)) > 990


def test_randrange_bounds():
    r = XorShift64Star(5)
    vals = [r.randrange(7) for _ in range(500)]
    assert set(vals) <= set(range(7))
    assert len(set(vals)) == 7


def test_shuffle_permutes_deterministically():
    xs = list(range(20))
    a, b = xs[:], xs[:]
    XorShift64Star(11).shuffle(a)
    XorShift64Star(11).shuffle(b)
    assert a == b
    assert sorted(a) == xs
    assert a != xs  # 1/20! chance of a false alarm, effectively impossible


def test_name_recorded():
    assert XorShift64Star.name == "xorshift64star"
