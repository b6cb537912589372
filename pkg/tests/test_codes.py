"""Code kinds, encoding/decoding, and the three constructions."""

import itertools
import json

import numpy as np
import pytest

from secix import (
    AccessStructure,
    DecoderWitness,
    FieldMatrix,
    Instance,
    InvalidWitnessError,
    LinearCode,
    NoSecureCodeError,
    Receiver,
    TableCode,
    check_decodability,
    check_security,
    code_to_dict,
    construct_mds_code,
    decode,
    derandomize,
    load_code,
    parse_code,
    save_code,
    security_level,
    single_access_code,
    vandermonde,
)
from secix.oracle import BudgetExceededError
from conftest import (
    complementary_instance,
    crossed_pairs_instance,
    disjoint_sum_code,
    unwanted_key_instance,
)


# ---- encode -------------------------------------------------------------------

def test_encode_disjoint_sums():
    code = disjoint_sum_code(2)
    assert code.encode((1, 1, 1, 0)) == (0, 1)
    assert code.encode((0, 0, 0, 0)) == (0, 0)


def test_encode_dimension_checks():
    code = disjoint_sum_code(2)
    with pytest.raises(ValueError):
        code.encode((1, 1))
    with pytest.raises(ValueError):
        code.encode((1, 1, 1, 0), y=(1,))


def test_randomized_encode_and_key_enumeration():
    g = FieldMatrix(2, [[1, 0], [1, 0]])
    gt = FieldMatrix(2, [[1, 1]])
    code = LinearCode(g, gt)
    assert code.key_count == 2
    assert code.encode((1, 0), (1,)) == (0, 1)
    assert code.encode_state((1, 0), 1) == (0, 1)
    assert code.encode_state((1, 0), 0) == (1, 0)
    with pytest.raises(ValueError):
        code.encode((1, 0))  # key required


def test_key_vector_order_matches_lexicographic():
    g = FieldMatrix(3, [[1]])
    gt = FieldMatrix(3, [[1], [1]])
    code = LinearCode(g, gt)
    seen = [code.key_vector(i) for i in range(code.key_count)]
    assert seen == list(itertools.product(range(3), repeat=2))


def test_table_code_lookup_and_validation():
    table = {}
    for x in itertools.product(range(2), repeat=2):
        table[(x, 0)] = ((x[0] + x[1]) % 2,)
    code = TableCode(2, 2, 1, 1, table)
    assert code.encode((1, 1)) == (0,)
    missing = dict(table)
    del missing[((0, 0), 0)]
    with pytest.raises(ValueError):
        TableCode(2, 2, 1, 1, missing)
    bad_value = dict(table)
    bad_value[((0, 0), 0)] = (7,)
    with pytest.raises(ValueError):
        TableCode(2, 2, 1, 1, bad_value)


def test_linear_code_shape_validation():
    with pytest.raises(ValueError):
        LinearCode(FieldMatrix(2, [[1, 0]]), FieldMatrix(2, [[1]]))  # column mismatch
    with pytest.raises(ValueError):
        LinearCode(FieldMatrix(2, [[1]]), FieldMatrix(3, [[1]]))  # field mismatch


# ---- MDS construction ------------------------------------------------------------

def test_mds_length_is_messages_minus_min_knowledge():
    inst = Instance(3, 3, tuple(Receiver({j for j in range(1, 4)} - {i}, {i}) for i in (1, 2, 3)))
    code = construct_mds_code(inst)
    assert code.length == 1
    assert code.generator.to_lists() == [[1], [1], [1]]


def test_mds_small_case():
    inst = unwanted_key_instance(2)
    code = construct_mds_code(inst)
    assert code.length == 1
    assert code.generator.to_lists() == [[1], [1]]


def test_mds_field_substitution_when_q_too_small():
    inst = crossed_pairs_instance(2)  # m=4 but q=2
    code = construct_mds_code(inst)
    assert code.q == 5
    assert code.length == 3
    # any 3 rows of the generator stay independent
    for subset in itertools.combinations(range(4), 3):
        sub = FieldMatrix(5, code.generator.data[list(subset), :])
        assert sub.rank() == 3


def test_mds_requires_normalized_instance():
    lazy = Instance(2, 2, (Receiver({1, 2}, {1}),))
    with pytest.raises(ValueError, match="normalize"):
        construct_mds_code(lazy)


# ---- decode ----------------------------------------------------------------------

def test_decode_matches_encode_on_all_messages():
    """Exhaustive inverse check for the length-1 sum code over GF(3)."""
    inst = Instance(3, 3, (Receiver({2, 3}, {1}),))
    code = construct_mds_code(inst)
    for x in itertools.product(range(3), repeat=3):
        word = code.encode(x)
        got = decode(code, inst, 1, word, (x[1], x[2]))
        assert got == (x[0],)


def test_decode_receiver_three_subtracts_known():
    inst = crossed_pairs_instance(2)
    code = disjoint_sum_code(2)
    for x in itertools.product(range(2), repeat=4):
        word = code.encode(x)
        got = decode(code, inst, 3, word, (x[1], x[3]))  # knows messages 2 and 4
        assert got == (x[2],)
        assert got[0] == (word[1] - x[3]) % 2


def test_decode_pinned_coordinate_in_underdetermined_system():
    # receiver 1 knows only message 2; messages 3 and 4 stay entangled
    # but its wanted coordinate is still determined
    inst = crossed_pairs_instance(2)
    code = disjoint_sum_code(2)
    for x in itertools.product(range(2), repeat=4):
        got = decode(code, inst, 1, code.encode(x), (x[1],))
        assert got == (x[0],)


def test_decode_single_unknown():
    inst = Instance(5, 3, (Receiver({1, 2}, {3}),))
    code = LinearCode(FieldMatrix(5, [[1], [1], [2]]))
    x = (3, 1, 4)
    got = decode(code, inst, 1, code.encode(x), (3, 1))
    assert got == (4,)


def test_decode_failure_signal_when_not_determined():
    inst = Instance(2, 2, (Receiver(set(), {1}),))
    code = LinearCode(FieldMatrix(2, [[1], [1]]))  # receiver sees only x1+x2
    assert decode(code, inst, 1, (1,), ()) is None


def test_decode_inconsistent_codeword():
    inst = Instance(3, 2, (Receiver({2}, {1}),))
    code = LinearCode(FieldMatrix(3, [[1, 1], [0, 0]]))  # duplicated symbol
    assert decode(code, inst, 1, (1, 2), (0,)) is None  # no x with (x1, x1) = (1, 2)


def test_decode_rejects_randomized_and_bad_dimensions():
    inst = unwanted_key_instance(2)
    keyed = LinearCode(FieldMatrix(2, [[1], [1]]), FieldMatrix(2, [[1]]))
    with pytest.raises(ValueError):
        decode(keyed, inst, 1, (0,), (0,))
    det = LinearCode(FieldMatrix(2, [[1], [1]]))
    with pytest.raises(ValueError):
        decode(det, inst, 9, (0,), (0,))
    with pytest.raises(ValueError):
        decode(det, inst, 1, (0, 0), (0,))


def test_roundtrip_for_constructed_codes():
    """construct -> decode recovers every receiver's wants for every message
    vector (state spaces here are all far below 2^16)."""
    cases = [
        unwanted_key_instance(2),
        unwanted_key_instance(3),
        crossed_pairs_instance(2),
        complementary_instance(5, 4),
    ]
    for inst in cases:
        code = construct_mds_code(inst)
        q = code.q
        for x in itertools.product(range(q), repeat=inst.m):
            word = code.encode(x)
            for i, rec in enumerate(inst.receivers, start=1):
                side = tuple(x[j - 1] for j in sorted(rec.knows))
                got = decode(code, inst, i, word, side)
                assert got == tuple(x[j - 1] for j in sorted(rec.wants))


# ---- derandomize ------------------------------------------------------------------

def padded_key_code(q=2):
    """c = [x1 + x2 + y, y]"""
    return LinearCode(FieldMatrix(q, [[1, 0], [1, 0]]), FieldMatrix(q, [[1, 1]]))


def test_derandomize_padded_key_code(keyed2):
    code = padded_key_code()
    witness = DecoderWitness({(1, 1): ((1, 1), (1,))})
    det = derandomize(code, keyed2, witness)
    assert det.length == 1
    assert det.generator.to_lists() == [[1], [1]]
    assert check_decodability(det, keyed2) == [True]
    assert check_security(det, keyed2, AccessStructure.explicit([[]])).secure


def test_derandomize_zero_key_matrix_keeps_length(keyed2):
    code = LinearCode(FieldMatrix(2, [[1], [1]]), FieldMatrix(2, [[0]]))
    det = derandomize(code, keyed2, DecoderWitness({(1, 1): ((1,), (1,))}))
    assert det.length == 1
    assert check_decodability(det, keyed2) == [True]


def test_derandomize_full_rank_key_matrix_invalidates_witness(keyed2):
    # the key saturates both symbols; no decoding vector can dodge it
    code = LinearCode(FieldMatrix(2, [[1, 0], [1, 1]]), FieldMatrix(2, [[1, 0], [0, 1]]))
    with pytest.raises(InvalidWitnessError, match="nullspace"):
        derandomize(code, keyed2, DecoderWitness({(1, 1): ((1, 1), (1,))}))


def test_derandomize_rejects_wrong_identity(keyed2):
    code = padded_key_code()
    bad = DecoderWitness({(1, 1): ((0, 0), (1,))})  # d = 0 recovers nothing
    with pytest.raises(InvalidWitnessError, match="recover"):
        derandomize(code, keyed2, bad)


def test_derandomize_requires_complete_witness(keyed2):
    code = padded_key_code()
    with pytest.raises(InvalidWitnessError, match="missing"):
        derandomize(code, keyed2, DecoderWitness({}))


def test_derandomize_requires_randomized_code(keyed2):
    with pytest.raises(ValueError):
        derandomize(LinearCode(FieldMatrix(2, [[1], [1]])), keyed2, DecoderWitness({}))


def test_derandomize_dominates_pair_by_pair():
    """Wherever the keyed code's gap is zero for an (access, block) pair,
    the projected code's gap is zero for that same pair."""
    inst = crossed_pairs_instance(2)
    keyed = LinearCode(
        FieldMatrix(2, [[1, 0, 0], [1, 0, 0], [0, 1, 0], [0, 1, 0]]),
        FieldMatrix(2, [[0, 1, 1]]),
    )
    witness = DecoderWitness({
        (1, 1): ((1, 0, 0), (1,)),
        (2, 2): ((1, 0, 0), (1,)),
        (3, 3): ((0, 1, 1), (0, 1)),
        (4, 4): ((0, 1, 1), (0, 1)),
    })
    det = derandomize(keyed, inst, witness)
    for acc in (AccessStructure.t_level(1), AccessStructure.explicit([[3, 4], [2]])):
        before = check_security(keyed, inst, acc)
        after = check_security(det, inst, acc)
        by_pair = {(p.access, p.block): p.uniform for p in after.checks}
        for pair in before.checks:
            if pair.uniform:
                assert by_pair[(pair.access, pair.block)], (pair.access, pair.block)


# ---- single-access construction -----------------------------------------------------

def test_single_access_empty_set_is_mds(keyed2):
    code = single_access_code(keyed2, set())
    assert code.generator.to_lists() == [[1], [1]]  # x1 + x2


def test_single_access_full_set_sends_everything(crossed2):
    code = single_access_code(crossed2, {1, 2, 3, 4})
    assert code.generator == FieldMatrix.identity(2, 4)


def test_single_access_raises_on_compromised_receiver():
    inst = Instance(2, 2, (Receiver({2}, {1}),))
    with pytest.raises(NoSecureCodeError) as err:
        single_access_code(inst, {2})
    assert err.value.receiver == 1
    assert err.value.access == frozenset({2})


def test_single_access_crossed_instance_passes_oracle(crossed2):
    access = frozenset({3, 4})
    code = single_access_code(crossed2, access)
    assert all(check_decodability(code, crossed2))
    assert check_security(code, crossed2, AccessStructure.explicit([access])).secure


def test_single_access_mixed_receiver_types():
    # receiver 1 protected part only; receiver 2 served by the clear part
    inst = Instance(2, 3, (Receiver({2}, {1}), Receiver({1, 2}, {3})))
    access = frozenset({3})
    code = single_access_code(inst, access)
    assert all(check_decodability(code, inst))
    assert check_security(code, inst, AccessStructure.explicit([access])).secure


# ---- security level ----------------------------------------------------------------

def test_security_level_sum_code():
    code = LinearCode(vandermonde(3, 1, 3))
    # span of (1,1,1) over GF(3): weights {3}; level = 3 - 2
    assert security_level(code) == 1


def test_security_level_identity_leaks():
    code = LinearCode(FieldMatrix.identity(2, 3))
    assert security_level(code) == -1


def test_security_level_disjoint_sum_code():
    # span over GF(2): {1100, 0011, 1111} -> min weight 2 -> level 0
    code = disjoint_sum_code(2)
    spanned = set()
    for a in range(2):
        for b in range(2):
            if a or b:
                vec = tuple((a * r[0] + b * r[1]) % 2 for r in [(1, 0), (1, 0), (0, 1), (0, 1)])
                spanned.add(vec)
    assert min(sum(v) for v in spanned) == 2
    assert security_level(code) == 0


def test_security_level_zero_generator():
    assert security_level(LinearCode(FieldMatrix.zeros(2, 3, 2))) == -1


def test_security_level_budget():
    code = LinearCode(vandermonde(5, 4, 5))
    with pytest.raises(BudgetExceededError):
        security_level(code, budget=10)


def test_security_level_vandermonde_grid():
    """For Vandermonde generators the level is (m - length) - 1."""
    for m in range(2, 7):
        q = 2 if m <= 2 else (3 if m <= 3 else (5 if m <= 5 else 7))
        for length in range(1, m):
            code = LinearCode(vandermonde(m, length, q))
            assert security_level(code) == m - length - 1, (m, length, q)


# ---- JSON ----------------------------------------------------------------------------

def test_code_json_roundtrip(tmp_path):
    det = disjoint_sum_code(3)
    path = tmp_path / "code.json"
    save_code(path, det)
    assert load_code(path) == det
    keyed = padded_key_code()
    obj = json.loads(json.dumps(code_to_dict(keyed)))
    assert parse_code(obj) == keyed
    assert obj["kind"] == "linear_rand"


def test_parse_code_errors():
    with pytest.raises(ValueError):
        parse_code({"kind": "linear_det", "q": 2})
    with pytest.raises(ValueError):
        parse_code({"kind": "mystery", "q": 2, "G": [[1]]})
    with pytest.raises(ValueError):
        parse_code({"kind": "linear_rand", "q": 2, "G": [[1]]})
    with pytest.raises(ValueError):
        parse_code({"kind": "linear_det", "q": 2, "G": [[1]], "Gtilde": [[1]]})
