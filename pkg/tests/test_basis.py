import numpy as np
import pytest

from griesmer.basis import CertificateError, construct_basis, q_exponent, verify_basis
from griesmer.constructions import hexacode, ovoid, simplex
from griesmer.finite_field import field_of_order, rank
from griesmer.linear_code import CodeError, LinearCode, ceil_div


def test_q_exponent():
    assert q_exponent(4, 4) == 1
    assert q_exponent(4, 16) == 2
    assert q_exponent(3, 6) == 1
    assert q_exponent(4, 6) == 0


def test_simplex_is_constant_weight():
    rows, cert = construct_basis(simplex(2, 3))
    assert cert.e == 2
    assert len(cert.prefix) == 3
    assert cert.column_ledger == [1, 1, 1]


def test_hexacode_certificate():
    h = hexacode()
    rows, cert = construct_basis(h)
    assert cert.e == 1
    assert [c["rows"] for c in cert.prefix] == [1, 2]
    assert cert.prefix[-1]["length"] == 5 and cert.prefix[-1]["weights"] == [4]
    assert all(o["length"] == 5 and o["d"] == 4 for o in cert.omissions)
    assert "prefix rows 1..2" in cert.report()


def test_ovoid_certificate():
    rows, cert = construct_basis(ovoid(3))
    assert cert.e == 1
    assert cert.prefix[-1] == {"rows": 2, "length": 8, "weights": [6]}
    assert len(cert.omissions) == 4
    assert all(o["length"] == 9 and o["d"] == 6 for o in cert.omissions)


def test_every_corpus_code_gets_a_certificate(griesmer_codes):
    for code in griesmer_codes:
        rows, cert = construct_basis(code)
        gam = ceil_div(code.d, code.q ** (code.k - 1))
        assert cert.column_ledger == [gam] * code.k, code
        assert len(cert.prefix) == min(cert.e + 1, code.k)
        # the certificate is reproducible from the rows alone
        again = verify_basis(code, rows)
        assert again.column_ledger == cert.column_ledger


def test_arbitrary_basis_fails_a_named_clause():
    h = hexacode()
    heavy = h.words_of_weight(6)[0]
    # complete a weight-6 word to a basis using generator rows
    rows = [heavy]
    for r in h.gen:
        if len(rows) < 3 and rank(h.field, np.array(rows + [r])) == len(rows) + 1:
            rows.append(r)
    with pytest.raises(CertificateError) as err:
        verify_basis(h, np.array(rows))
    assert err.value.clause == "prefix[1]"


def test_wrong_rank_is_rejected():
    h = hexacode()
    rows = np.array([h.gen[0], h.gen[0], h.gen[1]])
    with pytest.raises(CertificateError) as err:
        verify_basis(h, rows)
    assert err.value.clause == "basis"


def test_non_griesmer_input_is_rejected():
    code = LinearCode(field_of_order(2), [[1, 1, 1, 0], [0, 1, 1, 1]])
    with pytest.raises(CodeError):
        construct_basis(code)
