from dataclasses import replace

import pytest

from relgap.errors import CertificateError, InvalidParameterError, TietzeError
from relgap.models.presentation import (
    ADD_GENERATOR, ADD_RELATOR, REMOVE_GENERATOR, REMOVE_RELATOR,
    DerivationCertificate, DerivationFactor, Presentation, TietzeMove
)
from relgap.models.word import Word
from relgap.services.homology_service import h1
from relgap.services.presentation_service import (
    check_derivation, commutator_form, commutator_prelude, conjugated_x, deficiency_of,
    derive_abbreviation_certificate, derive_bn_certificate, format_presentation, gamma_presentation,
    hnn_chain, parse_presentation, q_presentation, rho, tietze_apply, verify_chain
)
from relgap.services.word_service import commutator, parse_word, substitute


def test_rho():
    assert str(rho(2)) == 't.x.t^-1.x.t.x^-1.t^-1.x^-3'
    assert str(rho(1)) == 't.x.t^-1.x.t.x^-1.t^-1.x^-2'
    with pytest.raises(InvalidParameterError):
        rho(0)


def test_rho_is_the_conjugation_relation():
    y = conjugated_x()
    for n in range(1, 6):
        expected = substitute(parse_word(f'y.x.y^-1.x^-{n + 1}'), {'y': y})
        assert rho(n) == expected


def test_q_presentation():
    p = q_presentation(2)
    assert p.generators == ('x', 't')
    assert p.relators == (rho(2), Word.letter('x', 2))
    assert q_presentation(1).relators[1] == Word.letter('x')
    assert deficiency_of(q_presentation(3)) == 0
    assert deficiency_of(q_presentation(5)) == 0


def test_gamma_presentation():
    p = gamma_presentation([2, 3])
    assert p.generators == ('x1', 't1', 'x2', 't2')
    assert p.relator_count == 4
    assert deficiency_of(p) == 0
    assert p.relators[3] == Word.letter('x2', 3)
    assert gamma_presentation([2, 3, 5]).generator_count == 6
    assert gamma_presentation([2, 3, 5]).relator_count == 6

    single = gamma_presentation([2])
    renamed = [substitute(r, {'x': Word.letter('x1'), 't': Word.letter('t1')}) for r in q_presentation(2).relators]
    assert list(single.relators) == renamed

    with pytest.raises(InvalidParameterError):
        gamma_presentation([])


def test_deficiency_of_free_group():
    assert deficiency_of(Presentation(('x', 't'))) == -2


def test_presentation_validation():
    with pytest.raises(TietzeError):
        Presentation(('x', 'x'))
    with pytest.raises(TietzeError):
        Presentation(('x',), (Word.letter('t'),))
    with pytest.raises(TietzeError):
        Presentation(('x',), (Word.identity(),))


def test_add_generator_appends_defining_relator():
    p = q_presentation(3)
    move = TietzeMove(ADD_GENERATOR, name='b', word=conjugated_x())
    q = tietze_apply(p, move)
    assert q.generators == ('x', 't', 'b')
    assert q.relator_count == 3
    assert q.relators[-1] == parse_word('b.t.x^-1.t^-1')
    assert deficiency_of(q) == deficiency_of(p)


def test_add_then_remove_generator_is_identity():
    for n in range(1, 6):
        p = q_presentation(n)
        added = tietze_apply(p, TietzeMove(ADD_GENERATOR, name='b', word=conjugated_x()))
        assert tietze_apply(added, TietzeMove(REMOVE_GENERATOR, name='b')) == p


def test_abbreviating_generator_rewrites_relators():
    p = commutator_form(3)
    q = tietze_apply(p, TietzeMove(ADD_GENERATOR, name='b', word=conjugated_x(), abbreviate=True))
    assert parse_word('b.x.b^-1.x^-1') in q.relators
    assert commutator(conjugated_x(), Word.letter('x')) not in q.relators

    plain = tietze_apply(p, TietzeMove(ADD_GENERATOR, name='b', word=conjugated_x()))
    assert check_derivation(plain.relators, derive_abbreviation_certificate(plain), parse_word('b.x.b^-1.x^-1'))


def test_add_generator_errors():
    p = q_presentation(2)
    with pytest.raises(TietzeError):
        tietze_apply(p, TietzeMove(ADD_GENERATOR, name='x', word=Word.letter('t')))
    with pytest.raises(TietzeError):
        tietze_apply(p, TietzeMove(ADD_GENERATOR, name='b', word=Word.letter('z')))
    with pytest.raises(TietzeError):
        tietze_apply(p, TietzeMove(REMOVE_GENERATOR, name='x'))
    with pytest.raises(TietzeError):
        TietzeMove('swap-generators')


def test_add_relator_needs_valid_certificate():
    n = 2
    with_b = hnn_chain(n)[1][0]
    bn = Word.letter('b', n)
    with pytest.raises(CertificateError):
        tietze_apply(with_b, TietzeMove(ADD_RELATOR, word=bn, certificate=DerivationCertificate()))
    with pytest.raises(TietzeError):
        tietze_apply(with_b, TietzeMove(ADD_RELATOR, word=bn))
    result = tietze_apply(with_b, TietzeMove(ADD_RELATOR, word=bn, certificate=derive_bn_certificate(n, with_b)))
    assert result.generator_count == 3
    assert result.relator_count == 4


def test_remove_relator():
    p = tietze_apply(q_presentation(2), TietzeMove(
        ADD_RELATOR, word=Word.letter('x', 4),
        certificate=DerivationCertificate((DerivationFactor(Word.identity(), 1, 1),
                                           DerivationFactor(Word.identity(), 1, 1)))
    ))
    assert p.relator_count == 3
    wrong = DerivationCertificate((DerivationFactor(Word.letter('t'), 1, 1),
                                   DerivationFactor(Word.letter('t'), 1, 1)))
    with pytest.raises(CertificateError):
        tietze_apply(p, TietzeMove(REMOVE_RELATOR, word=Word.letter('x', 4), certificate=wrong))

    right = DerivationCertificate((DerivationFactor(Word.identity(), 1, 1),
                                   DerivationFactor(Word.identity(), 1, 1)))
    back = tietze_apply(p, TietzeMove(REMOVE_RELATOR, word=Word.letter('x', 4), certificate=right))
    assert back == q_presentation(2)

    with pytest.raises(TietzeError):
        tietze_apply(back, TietzeMove(REMOVE_RELATOR, word=Word.letter('x', 4), certificate=right))


def test_derive_bn_certificate():
    n = 2
    with_b = hnn_chain(n)[1][0]
    cert = derive_bn_certificate(n, with_b)
    assert len(cert.factors) == n + 1
    assert check_derivation(with_b.relators, cert, Word.letter('b', n))
    assert check_derivation(hnn_chain(4)[1][0].relators, derive_bn_certificate(4), Word.letter('b', 4))


def test_tampered_bn_certificate_fails():
    n = 3
    with_b = hnn_chain(n)[1][0]
    cert = derive_bn_certificate(n, with_b)
    for i, factor in enumerate(cert.factors):
        tampered = list(cert.factors)
        tampered[i] = DerivationFactor(factor.conjugator * Word.letter('b'), factor.relator_index, factor.sign)
        assert not check_derivation(with_b.relators, DerivationCertificate(tuple(tampered)), Word.letter('b', n))


def test_check_derivation_rejects_bad_indices():
    cert = DerivationCertificate((DerivationFactor(Word.identity(), 5, 1),))
    assert not check_derivation([Word.letter('x', 2)], cert, Word.letter('x', 2))
    cert = DerivationCertificate((DerivationFactor(Word.identity(), 0, 2),))
    assert not check_derivation([Word.letter('x', 2)], cert, Word.letter('x', 4))


def test_hnn_chain_shape():
    steps = hnn_chain(2)
    assert len(steps) == 3
    assert steps[0][1] is None
    final = steps[-1][0]
    assert final.generators == ('x', 't', 'b')
    assert list(final.relators) == [
        parse_word('b.x.b^-1.x^-1'), Word.letter('x', 2), parse_word('b.t.x^-1.t^-1'), Word.letter('b', 2)
    ]
    assert hnn_chain(1)[-1][0].relator_count == 4
    assert hnn_chain(2, include_prelude=True)[-1][0].relators[:2] == (Word.letter('x', 2), parse_word('b.x.b^-1.x^-1'))


def test_abbreviation_is_certified():
    p = commutator_form(3)
    plain = tietze_apply(p, TietzeMove(ADD_GENERATOR, name='b', word=conjugated_x()))
    good = derive_abbreviation_certificate(plain)
    move = TietzeMove(ADD_GENERATOR, name='b', word=conjugated_x(), abbreviate=True, certificates=(good,))
    assert parse_word('b.x.b^-1.x^-1') in tietze_apply(p, move).relators

    damaged = DerivationCertificate(good.factors[:-1])
    with pytest.raises(CertificateError):
        tietze_apply(p, replace(move, certificates=(damaged,)))
    with pytest.raises(CertificateError):
        tietze_apply(p, replace(move, certificates=(good, good)))


def test_abbreviation_without_certificates_derives_its_own():
    # Several blocks, both orientations, next to other letters
    r = parse_word('t.x.t^-1.x^2.t.x^-1.t^-1.x.t.x.t^-1')
    p = Presentation(('x', 't'), (r, Word.letter('x', 5)))
    q = tietze_apply(p, TietzeMove(ADD_GENERATOR, name='b', word=conjugated_x(), abbreviate=True))
    assert q.relators == (parse_word('b.x^2.b^-1.x.b'), Word.letter('x', 5), parse_word('b.t.x^-1.t^-1'))


def test_chain_with_damaged_abbreviation_is_rejected():
    steps = hnn_chain(2)
    with_b, add_b = steps[1]
    damaged = DerivationCertificate(add_b.certificates[0].factors[1:])
    assert not verify_chain([steps[0], (with_b, replace(add_b, certificates=(damaged,)))])
    assert verify_chain(steps[:2])


def test_hnn_chain_certificates_check():
    for n in range(1, 11):
        assert verify_chain(hnn_chain(n))
        assert verify_chain(hnn_chain(n, include_prelude=True))


def test_commutator_prelude():
    steps = commutator_prelude(3)
    assert steps[0][0] == q_presentation(3)
    end = steps[-1][0]
    assert set(end.relators) == {Word.letter('x', 3), commutator(conjugated_x(), Word.letter('x'))}
    assert verify_chain(steps)


def test_hnn_chain_preserves_h1():
    for n in range(1, 7):
        groups = [h1(p) for p, _ in hnn_chain(n, include_prelude=True)]
        assert all(g == groups[0] for g in groups)


def test_verify_chain_detects_broken_step():
    steps = hnn_chain(2)
    broken = steps[:2] + [(steps[2][0], TietzeMove(ADD_RELATOR, word=Word.letter('b', 2),
                                                    certificate=DerivationCertificate()))]
    assert not verify_chain(broken)


def test_parse_and_format_presentation():
    text = "# Q_2\nx,t\nt.x.t^-1.x.t.x^-1.t^-1.x^-3\nx^2\n"
    p = parse_presentation(text)
    assert p == q_presentation(2)
    assert parse_presentation(format_presentation(p)) == p
    assert parse_presentation("x\n").relators == ()
    with pytest.raises(TietzeError):
        parse_presentation("# nothing\n")
