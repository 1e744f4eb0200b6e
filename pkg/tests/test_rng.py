from lattice_lab import SplitMix64, splitmix64_next

# Frozen outputs of an independently written transcription of the
# splitmix64 algorithm (see _reference_stream below, which regenerates
# them); the first value for seed 0 also matches the widely published
# reference output.
REFERENCE_VECTORS = {
    0: [16294208416658607535, 7960286522194355700, 487617019471545679],
    1: [10451216379200822465, 13757245211066428519, 17911839290282890590],
    42: [13679457532755275413, 2949826092126892291, 5139283748462763858],
}


def _reference_stream(seed, count):
    # deliberately restated from the algorithm, not from rng.py
    modulus = 2**64

    def mix(z):
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) % modulus
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) % modulus
        return z ^ (z >> 31)

    out = []
    s = seed % modulus
    for _ in range(count):
        s = (s + 0x9E3779B97F4A7C15) % modulus
        out.append(mix(s))
    return out


def test_reference_transcription_matches_frozen_vectors():
    for seed, expected in REFERENCE_VECTORS.items():
        assert _reference_stream(seed, 3) == expected


def test_splitmix64_next_matches_reference():
    for seed, expected in REFERENCE_VECTORS.items():
        state = seed
        got = []
        for _ in range(3):
            value, state = splitmix64_next(state)
            got.append(value)
        assert got == expected


def test_stream_determinism():
    a = SplitMix64(987654321)
    b = SplitMix64(987654321)
    assert [a.next_u64() for _ in range(64)] == [b.next_u64() for _ in range(64)]


def test_distinct_seeds_distinct_first_outputs():
    assert SplitMix64(1).next_u64() != SplitMix64(2).next_u64()


def test_below_is_deterministic_and_in_range():
    rng = SplitMix64(7)
    draws = [rng.below(97) for _ in range(200)]
    assert all(0 <= d < 97 for d in draws)
    rng2 = SplitMix64(7)
    assert draws == [rng2.below(97) for _ in range(200)]


def test_state_wraps_mod_2_64():
    value, state = splitmix64_next((1 << 64) - 1)
    assert 0 <= value < 1 << 64
    assert 0 <= state < 1 << 64
