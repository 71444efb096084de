import itertools
import random
from dataclasses import replace

import pytest

import helpers
from fusionexp import (
    BadThreshold,
    IdentityBase,
    VerifyFailed,
    VssShare,
    fb_identity,
    fb_mul,
    fdh_keygen,
    fdh_shared,
    fe,
    fe_add,
    fe_mul,
    fe_one,
    fe_random,
    felgamal_decrypt,
    felgamal_encrypt,
    felgamal_keygen,
    fusion_pow,
    generator_element,
    make_field_params,
    scalar_embed,
    unit_embed,
    vss_deal,
    vss_reconstruct,
    vss_verify,
    vss_verify_all,
)
from fusionexp.protocols import share_point


def test_fdh_worked_example(g23, f121):
    base = unit_embed(generator_element(g23), f121)
    a = fe(f121, [3, 5])
    b = fe(f121, [2, 0])
    pub_a = fusion_pow(base, a)
    pub_b = fusion_pow(base, b)
    shared = fusion_pow(pub_b, a)
    assert shared == fusion_pow(pub_a, b)
    assert fe_mul(a, b).coeffs == (6, 10)
    assert shared == fusion_pow(base, fe(f121, [6, 10]))


def test_fdh_unit_secret(g23, f121):
    rng = random.Random(0)
    base = unit_embed(generator_element(g23), f121)
    me = fdh_keygen(base, rng)
    from fusionexp import FusionKeyPair

    them = FusionKeyPair(secret=fe_one(f121), public=fusion_pow(base, fe_one(f121)))
    assert fdh_shared(them, me.public) == me.public


def test_fdh_agreement_trials(g23, f121):
    rng = random.Random(1)
    base = unit_embed(generator_element(g23), f121)
    for _ in range(300):
        a = fdh_keygen(base, rng)
        b = fdh_keygen(base, rng)
        assert fdh_shared(a, b.public) == fdh_shared(b, a.public)


def test_fdh_rejects_identity_base(g23, f121):
    with pytest.raises(IdentityBase):
        fdh_keygen(fb_identity(g23, f121), random.Random(0))


def test_felgamal_roundtrip_trials(g23, f121):
    rng = random.Random(2)
    g = generator_element(g23)
    base = unit_embed(g, f121)
    keys = felgamal_keygen(base, rng)
    for _ in range(300):
        msg = scalar_embed(g, fe_random(f121, rng))
        ct = felgamal_decrypt(keys.secret, felgamal_encrypt(base, keys.public, msg, rng))
        assert ct == msg


def test_felgamal_degree_one_matches_scalar(g23):
    params = make_field_params(11, 1, [0])
    base = unit_embed(generator_element(g23), params)
    scalar = helpers.ScalarElGamal(g23)
    rng_a = random.Random(42)
    rng_b = random.Random(42)
    for _ in range(300):
        keys = felgamal_keygen(base, rng_a)
        sk, pk = scalar.keygen(rng_b)
        assert keys.secret.coeffs == (sk,)
        assert keys.public.components[0].residue == pk
        msg_res = rng_a.randrange(11)
        rng_b.randrange(11)  # mirror the draw
        msg = fusion_pow(base, fe(params, [msg_res]))
        msg_scalar = pow(g23.generator, msg_res, g23.modulus)
        ct = felgamal_encrypt(base, keys.public, msg, rng_a)
        c1, c2 = scalar.encrypt(pk, msg_scalar, rng_b)
        assert ct.c1.components[0].residue == c1
        assert ct.c2.components[0].residue == c2
        back = felgamal_decrypt(keys.secret, ct)
        assert back.components[0].residue == scalar.decrypt(sk, (c1, c2)) == msg_scalar


def test_homomorphic_exponent_sums(g23, f121):
    # the property the share-verification equation relies on
    rng = random.Random(3)
    base = unit_embed(generator_element(g23), f121)
    for _ in range(200):
        a, b = fe_random(f121, rng), fe_random(f121, rng)
        assert fusion_pow(base, fe_add(a, b)) == fb_mul(
            fusion_pow(base, a), fusion_pow(base, b)
        )


def test_vss_worked_example(g23, f121):
    rng = random.Random(4)
    base = unit_embed(generator_element(g23), f121)
    secret = fe(f121, [7, 1])
    dealing = vss_deal(secret, t=2, m=3, base=base, rng=rng)
    assert len(dealing.shares) == 3 and len(dealing.commitments) == 2
    # first commitment binds the secret itself
    assert dealing.commitments[0] == fusion_pow(base, secret)
    for j in (1, 2, 3):
        assert vss_verify(dealing, j)
    for pair in itertools.combinations(dealing.shares, 2):
        assert vss_reconstruct(pair) == secret
    assert vss_reconstruct(dealing.shares) == secret
    vss_verify_all(dealing)  # should not raise


def test_vss_threshold_one_constant_polynomial(g23, f121):
    rng = random.Random(5)
    base = unit_embed(generator_element(g23), f121)
    secret = fe(f121, [4, 9])
    dealing = vss_deal(secret, t=1, m=4, base=base, rng=rng)
    assert all(s.value == secret for s in dealing.shares)
    assert dealing.commitments == (fusion_pow(base, secret),)


def test_vss_exhaustive_subsets(g23, f121):
    rng = random.Random(6)
    base = unit_embed(generator_element(g23), f121)
    for t in (1, 2, 3):
        for m in range(t, 6):
            secret = fe_random(f121, rng, nonzero=True)
            dealing = vss_deal(secret, t, m, base, rng)
            for s in dealing.shares:
                assert vss_verify(dealing, s.index)
            for subset in itertools.combinations(dealing.shares, t):
                assert vss_reconstruct(subset) == secret


def test_vss_single_corruption_detected(g23, f121):
    rng = random.Random(7)
    base = unit_embed(generator_element(g23), f121)
    secret = fe_random(f121, rng, nonzero=True)
    dealing = vss_deal(secret, t=2, m=4, base=base, rng=rng)
    for victim in dealing.shares:
        tampered = VssShare(victim.index, fe_add(victim.value, fe_one(f121)))
        corrupted = replace(
            dealing,
            shares=tuple(
                tampered if s.index == victim.index else s for s in dealing.shares
            ),
        )
        flags = [s.index for s in corrupted.shares if not vss_verify(corrupted, s.index)]
        assert flags == [victim.index]
        with pytest.raises(VerifyFailed) as err:
            vss_verify_all(corrupted)
        assert err.value.share_index == victim.index


def test_vss_share_points_distinct_nonzero(f121):
    points = [share_point(f121, j) for j in range(1, 121)]
    assert len(set(points)) == 120
    assert all(any(c != 0 for c in p.coeffs) for p in points)


def test_vss_bad_threshold(g23, f121):
    rng = random.Random(8)
    base = unit_embed(generator_element(g23), f121)
    secret = fe_random(f121, rng)
    with pytest.raises(BadThreshold):
        vss_deal(secret, t=0, m=3, base=base, rng=rng)
    with pytest.raises(BadThreshold):
        vss_deal(secret, t=4, m=3, base=base, rng=rng)
    tiny = make_field_params(3, 1, [1])
    tiny_base = unit_embed(generator_element(_g7()), tiny)
    with pytest.raises(BadThreshold):
        vss_deal(fe(tiny, [2]), t=1, m=3, base=tiny_base, rng=rng)  # only 2 points


def _g7():
    from fusionexp import GroupParams

    return GroupParams(modulus=7, q=3, generator=2)


def test_vss_reconstruct_input_validation(g23, f121):
    rng = random.Random(9)
    base = unit_embed(generator_element(g23), f121)
    dealing = vss_deal(fe_random(f121, rng), 2, 3, base, rng)
    with pytest.raises(BadThreshold):
        vss_reconstruct([])
    with pytest.raises(ValueError):
        vss_reconstruct([dealing.shares[0], dealing.shares[0]])
