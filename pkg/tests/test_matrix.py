from itertools import permutations
from pathlib import Path

import pytest

from src.ciu_logic.tools.fibword import fib
from src.ciu_logic.tools.matrix import (
    GenericMatrix, is_truth_value, alternating,
    build_support_recursive, build_support_direct, designated_set,
    neg_op, imp_op, build_matrix, materialize, relabel, find_isomorphism,
    export_json, import_json, format_tables
)
from src.ciu_logic.utils.errors import MalformedMatrixError, MalformedValueError, ResourceLimitError, DomainError

FIXTURES = Path(__file__).parent / "fixtures"


def load_fixture(name: str) -> str:
    return (FIXTURES / name).read_text(encoding="utf-8")


class TestSupport:
    """A_n / D_n 구성 테스트"""

    def test_small_supports(self):
        assert build_support_recursive(0) == {(0,), (1,)}
        assert build_support_recursive(1) == {(1, 1), (1, 0), (0, 1)}
        assert build_support_recursive(2) == {(0, 1, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0), (1, 1, 1)}
        assert designated_set(1) == {(1, 1), (1, 0)}

    @pytest.mark.parametrize("n", range(16))
    def test_recursive_equals_direct(self, n):
        """두 구성 방법의 결과 일치"""
        assert build_support_recursive(n) == build_support_direct(n)

    @pytest.mark.parametrize("n", range(21))
    def test_cardinalities(self, n):
        """|A_n| = Fb(n+3), |D_n| = |A_{n-1}|"""
        assert len(build_support_recursive(n)) == fib(n + 3)
        if n > 0:
            assert len(designated_set(n)) == len(build_support_recursive(n - 1))

    def test_support_guards(self):
        with pytest.raises(ResourceLimitError, match="fib\\(43\\)"):
            build_support_recursive(40)
        with pytest.raises(ResourceLimitError):
            build_support_direct(10, max_evals=100)
        with pytest.raises(DomainError):
            build_support_recursive(-1)

    def test_is_truth_value(self):
        assert is_truth_value((1, 0, 1))
        assert is_truth_value((0,))
        assert not is_truth_value((1, 0, 0))
        assert not is_truth_value((1, 2))
        assert not is_truth_value(())
        assert not is_truth_value((1, 1), n=2)

    def test_alternating(self):
        assert alternating(0, 1) == (1,)
        assert alternating(3, 1) == (1, 0, 1, 0)
        assert alternating(2, 0) == (0, 1, 0)


class TestOperations:
    """¬ / ⊃ 연산 테스트"""

    def test_negation_examples(self):
        assert neg_op((0,)) == (1,)
        assert neg_op((1,)) == (0,)
        assert neg_op((1, 1)) == (1, 0)
        assert neg_op((1, 0, 1)) == (0, 1, 0)
        assert neg_op((1, 1, 1)) == (1, 1, 0)

    def test_implication_examples(self):
        assert imp_op((1, 1), (0, 1)) == (0, 1)
        assert imp_op((0, 1), (0, 1)) == (1, 0)
        assert imp_op((1, 1, 1), (1, 0, 1)) == (1, 0, 1)

    def test_malformed_inputs(self):
        """A_n 밖의 값은 거부"""
        with pytest.raises(MalformedValueError):
            neg_op((0, 0))
        with pytest.raises(MalformedValueError):
            imp_op((1, 1), (1, 0, 1))
        with pytest.raises(MalformedValueError):
            imp_op((1, 2), (1, 1))

    @pytest.mark.parametrize("n", range(9))
    def test_closure_and_designation_law(self, n):
        """연산 닫힘 및 x ⊃ y ∈ D ⟺ x ∉ D 또는 y ∈ D"""
        support = build_support_recursive(n)
        for x in support:
            assert neg_op(x) in support
            for y in support:
                z = imp_op(x, y)
                assert z in support
                assert (z[0] == 1) == (x[0] == 0 or y[0] == 1)

    @pytest.mark.parametrize("n", range(6))
    def test_designation_mask(self, n):
        """지정값 마스크 = D_n"""
        matrix = build_matrix(n)
        assert {x for x in matrix.values if matrix.is_designated(x)} == designated_set(n)
        with pytest.raises(MalformedValueError):
            matrix.is_designated((1,) * (n + 2))

    @pytest.mark.parametrize("n", range(1, 8))
    def test_negation_of_alternating(self, n):
        assert neg_op(alternating(n, 1)) == alternating(n, 0)
        assert neg_op(alternating(n, 0)) == alternating(n, 1)


class TestMaterializedMatrix:
    """구체화된 표, JSON, 동형 테스트"""

    def test_m2_tables_match_fixture(self):
        """M_2 표가 손으로 옮긴 표와 칸마다 일치"""
        generated = materialize(build_matrix(2))
        assert generated == import_json(load_fixture("m2_tables.json"))

    def test_export_json_is_golden(self):
        assert export_json(materialize(build_matrix(2))) == load_fixture("m2_tables.json")

    def test_export_json_is_deterministic(self):
        first = export_json(materialize(build_matrix(4)))
        second = export_json(materialize(build_matrix(4)))
        assert first == second
        assert first.endswith("}\n")

    def test_import_rejects_malformed(self):
        """잘못된 행렬 문서"""
        with pytest.raises(MalformedMatrixError):
            import_json("not json")
        with pytest.raises(MalformedMatrixError):
            import_json('{"n": 0, "values": [[0], [0]], "designated": [1], "neg": [1, 0], '
                        '"imp": [[1, 1], [0, 1]]}')
        with pytest.raises(MalformedMatrixError):
            import_json('{"n": 0, "values": [[0], [1]], "designated": [1], "neg": [1, 2], '
                        '"imp": [[1, 1], [0, 1]]}')
        with pytest.raises(MalformedMatrixError):
            import_json('{"n": 0, "values": [[0], [1]], "designated": [1], "neg": [1, 0], '
                        '"imp": [[1, 1]]}')

    def test_materialize_guard(self):
        with pytest.raises(ResourceLimitError):
            materialize(build_matrix(2), max_table_entries=10)

    def test_format_tables_m0(self):
        expected = "\n".join([
            "~  | 0 1",
            "---+----",
            "   | 1 0",
            "",
            "-> | 0 1",
            "---+----",
            "0  | 1 1",
            "1  | 0 1",
        ]) + "\n"
        assert format_tables(materialize(build_matrix(0))) == expected

    def test_format_tables_m2(self):
        """M_2: ¬ 는 2행, ⊃ 는 5x5 격자"""
        lines = format_tables(materialize(build_matrix(2))).splitlines()
        assert lines[0] == "~       | (0,1,0) (0,1,1) (1,0,1) (1,1,0) (1,1,1)"
        assert lines[2] == "        | (1,0,1) (1,1,0) (0,1,0) (1,0,1) (1,1,0)"
        assert lines[4] == "->      | (0,1,0) (0,1,1) (1,0,1) (1,1,0) (1,1,1)"
        assert lines[6] == "(0,1,0) | (1,0,1) (1,0,1) (1,0,1) (1,0,1) (1,0,1)"
        assert lines[10] == "(1,1,1) | (0,1,0) (0,1,0) (1,0,1) (1,0,1) (1,0,1)"
        assert len(lines) == 11

    def test_identity_isomorphism_with_fixture(self):
        a = materialize(build_matrix(2))
        b = import_json(load_fixture("m2_tables.json"))
        assert find_isomorphism(a, b) == (0, 1, 2, 3, 4)

    @pytest.mark.parametrize("perm", list(permutations(range(3))))
    def test_permuted_m1_recovers_permutation(self, perm):
        """M_1 은 자명한 자기동형만 가지므로 순열이 그대로 복원된다"""
        m1 = materialize(build_matrix(1))
        assert find_isomorphism(m1, relabel(m1, perm)) == perm

    def test_sette_p1_is_m1(self):
        """Sette 의 P1 (F, T*, T) 과 M_1 의 동형"""
        m1 = materialize(build_matrix(1))
        p1 = import_json(load_fixture("sette_p1.json"))
        # F = (0,1), T = (1,0), T* = (1,1)
        assert find_isomorphism(m1, p1) == (0, 2, 1)

    def test_non_isomorphic(self):
        m0 = materialize(build_matrix(0))
        m1 = materialize(build_matrix(1))
        assert find_isomorphism(m0, m1) is None
        # 지정 집합만 다른 2치 행렬
        flipped = GenericMatrix(n=0, values=[[0], [1]], designated=[0], neg=[1, 0], imp=[[1, 1], [0, 1]])
        assert find_isomorphism(m0, flipped) is None

    def test_isomorphism_guard(self):
        m2 = materialize(build_matrix(2))
        with pytest.raises(ResourceLimitError):
            find_isomorphism(m2, m2, max_size=4)
        # 크기가 다르면 한도 검사 전에 None
        assert find_isomorphism(m2, materialize(build_matrix(3)), max_size=4) is None

    def test_relabel_rejects_non_permutation(self):
        with pytest.raises(MalformedMatrixError):
            relabel(materialize(build_matrix(1)), [0, 0, 1])
