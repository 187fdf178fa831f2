from spectral_pair import general_position_report, generation_attempts, random_pair


def test_hundred_consecutive_seeds_pass(seeded_pairs):
    assert len(seeded_pairs) == 100
    for pair in seeded_pairs[:10]:  # spot re-check; generation enforced all
        assert general_position_report(pair).passed


def test_same_seed_same_pair():
    p1 = random_pair(42)
    p2 = random_pair(42)
    assert p1.a.entries == p2.a.entries
    assert p1.b.entries == p2.b.entries


def test_rejection_rate_informational():
    attempts = [generation_attempts(seed) for seed in range(30)]
    rate = sum(a - 1 for a in attempts) / len(attempts)
    print(f"empirical rejection rate: {rate:.3f} rejected candidates per seed "
          f"(max attempts {max(attempts)})")
    assert max(attempts) < 50
