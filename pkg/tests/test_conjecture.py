from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from binomial_moments.conjecture import (
    Ansatz,
    AnsatzTerm,
    SearchConfig,
    explore_D_even,
    family_ansatz,
    fit,
    fitting_nodes,
    printed_forms,
    rediscover_all,
    search_catalogue,
    solve_exact,
)
from binomial_moments.errors import DomainError, Inconsistent, SingularSystem
from binomial_moments.moments import MomentQuery, oracle

F = Fraction


class TestSolveExact:
    def test_identity(self):
        rhs = [F(3), F(-1, 2), F(7)]
        eye = [[F(int(i == j)) for j in range(3)] for i in range(3)]
        assert solve_exact(eye, rhs) == rhs

    def test_two_by_two(self):
        assert solve_exact([[1, 1], [1, 2]], [3, 5]) == [F(1), F(2)]

    def test_power_of_two_vandermonde(self):
        # rows 2^(2n-2) * (1, n) against A_2 values: the n coefficient is 1
        rows, rhs = [], []
        for n in range(1, 5):
            p = F(2) ** (2 * n - 2)
            rows.append([p, p * n])
            rhs.append(oracle(MomentQuery("A", 2, n)))
        assert solve_exact(rows, rhs) == [F(0), F(1)]

    def test_singular(self):
        with pytest.raises(SingularSystem):
            solve_exact([[1, 2], [2, 4]], [1, 2])
        with pytest.raises(SingularSystem):
            solve_exact([[1, 2]], [1])  # fewer equations than unknowns

    def test_inconsistent(self):
        with pytest.raises(Inconsistent):
            solve_exact([[1, 0], [0, 1], [1, 1]], [1, 1, 3])

    @given(
        sol=st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4), min_size=1, max_size=4),
        data=st.data(),
    )
    @settings(max_examples=60, deadline=None)
    def test_recovers_known_solution(self, sol, data):
        k = len(sol)
        cell = st.integers(-4, 4)
        matrix = data.draw(
            st.lists(st.lists(cell, min_size=k, max_size=k), min_size=k, max_size=k)
        )
        rhs = [sum(F(a) * x for a, x in zip(row, sol)) for row in matrix]
        try:
            got = solve_exact(matrix, rhs)
        except SingularSystem:
            return
        assert got == [F(x) for x in sol]


class TestFit:
    A2 = Ansatz((AnsatzTerm("power2", 1, shift=-2),))

    def test_rediscovers_a2(self):
        cand = fit("A", 2, self.A2, [1, 2, 3, 4], list(range(5, 11)))
        assert cand.status == "verified"
        assert cand.coefficients == (F(0), F(1))
        assert cand.fitted_on == (1, 2)
        assert set(cand.verified_on) == {3, 4, 5, 6, 7, 8, 9, 10}
        assert cand.value_at(6) == oracle(MomentQuery("A", 2, 6))

    def test_rediscovers_b5_numerator(self):
        ansatz = Ansatz(
            (AnsatzTerm("central", 3, roots=((2, -1), (2, -3), (2, -5))),)
        )
        samples, hold = fitting_nodes(5, ansatz, 10)
        cand = fit("B", 5, ansatz, samples, hold)
        assert cand.status == "verified"
        # numerator n^2 (4n - 1) / 2
        assert cand.coefficients == (F(0), F(0), F(-1, 2), F(2))

    def test_refuted_with_first_mismatch(self):
        wrong = Ansatz((AnsatzTerm("central", 1),))
        cand = fit("A", 2, wrong, [1, 2], [3, 4, 5])
        assert cand.status == "refuted"
        assert cand.first_mismatch == 3

    def test_underdetermined_without_holdout(self):
        cand = fit("A", 2, self.A2, [1, 2], [])
        assert cand.status == "underdetermined"
        assert cand.coefficients == (F(0), F(1))

    def test_node_validation(self):
        with pytest.raises(DomainError):
            fit("A", 2, self.A2, [1, 2], [2, 3])  # overlap
        with pytest.raises(DomainError):
            fit("A", 2, self.A2, [1], [5])  # too few samples
        with pytest.raises(DomainError):
            fit("A", 2, self.A2, [1, 1, 2], [5])  # duplicate
        rooted = Ansatz((AnsatzTerm("sign", 1, roots=((1, -3),)),))
        with pytest.raises(DomainError):
            fit("C", 2, rooted, [3, 4, 5], [6])  # node on the root n = 3

    def test_deterministic(self):
        a = fit("D", 3, Ansatz((AnsatzTerm("bracket", 2), AnsatzTerm("unit", 2))), range(5, 11), range(11, 21))
        b = fit("D", 3, Ansatz((AnsatzTerm("bracket", 2), AnsatzTerm("unit", 2))), range(5, 11), range(11, 21))
        assert a == b


class TestRediscovery:
    def test_all_printed_formulas_recovered(self):
        report = rediscover_all(holdout=10)
        assert len(report.entries) == 37
        for e in report.entries:
            assert e.candidate.status == "verified", e.printed.label
            assert e.candidate.coefficients == e.printed.expected, e.printed.label
            disjoint = set(e.candidate.verified_on) - set(e.candidate.fitted_on)
            assert len(disjoint) >= 10, e.printed.label
        assert report.all_ok
        assert not report.failures()

    def test_labels_cover_all_families(self):
        labels = {pf.label for pf in printed_forms()}
        assert {"A0", "A10", "B0", "B9", "C0", "C10", "D1", "D9"} <= labels


class TestExploreDEven:
    config = SearchConfig(max_degree=2, max_roots=1)

    def test_honest_statuses(self):
        cands = explore_D_even(0, self.config)
        assert len(cands) == len(search_catalogue(self.config))
        assert all(c.status in ("verified", "refuted", "underdetermined") for c in cands)
        # nothing in the structural catalogue fits the open case
        assert all(c.status == "refuted" for c in cands)
        assert all(c.first_mismatch is not None for c in cands)

    def test_empty_catalogue(self):
        assert explore_D_even(1, SearchConfig(prefactors=())) == []

    def test_family_shapes(self):
        assert family_ansatz("D", "even", 1) is None
        assert family_ansatz("A", "even", 3).unknowns == 4
        shape = family_ansatz("C", "odd", 2)
        samples, hold = fitting_nodes(5, shape, 10)
        assert fit("C", 5, shape, samples, hold).status == "verified"
