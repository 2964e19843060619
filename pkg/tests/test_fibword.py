import pytest

from src.ciu_logic.tools.fibword import fib, sigma, expansion, expansion_levels, branch_sequences
from src.ciu_logic.tools.matrix import build_support_direct
from src.ciu_logic.utils.errors import DomainError, MalformedValueError, ResourceLimitError


class TestFibonacci:
    """피보나치 수 테스트"""

    def test_fib_values(self):
        assert [fib(k) for k in range(1, 8)] == [1, 1, 2, 3, 5, 8, 13]
        assert fib(13) == 233
        assert fib(43) == 433494437

    @pytest.mark.parametrize("k", [0, -1, -10])
    def test_fib_domain(self, k):
        """Fb 는 k >= 1 에서만 정의"""
        with pytest.raises(DomainError):
            fib(k)

    def test_fib_guard(self):
        """인덱스 한도 초과 → ResourceLimitError"""
        with pytest.raises(ResourceLimitError) as exc_info:
            fib(25000)
        assert exc_info.value.bound == 25000
        assert exc_info.value.limit == 10**4
        assert fib(50, max_k=50) == 12586269025
        with pytest.raises(ResourceLimitError):
            fib(51, max_k=50)


class TestBinaryExpansion:
    """σ 치환과 이진 전개 테스트"""

    def test_sigma(self):
        assert sigma("0") == "1"
        assert sigma("1") == "10"
        assert sigma("101") == "10110"
        assert sigma("") == ""

    def test_sigma_rejects_non_binary(self):
        with pytest.raises(MalformedValueError):
            sigma("102")

    def test_expansion_examples(self):
        assert expansion(1) == "0"
        assert expansion(4) == "101"
        assert expansion(5) == "10110"

    def test_expansion_levels(self):
        """트리의 각 층 W(1)..W(k)"""
        assert expansion_levels(5) == ["0", "1", "10", "101", "10110"]

    @pytest.mark.parametrize("k", range(1, 26))
    def test_expansion_length_is_fibonacci(self, k):
        assert len(expansion(k)) == fib(k)

    def test_expansion_guard(self):
        """k 상한 초과 시 자원 한도 오류"""
        with pytest.raises(ResourceLimitError) as exc_info:
            expansion(31)
        assert exc_info.value.bound == 31
        assert exc_info.value.limit == 30
        assert expansion(12, max_k=12) == expansion(12)
        with pytest.raises(DomainError):
            expansion(0)


class TestBranchSequences:
    """분기 열거 테스트"""

    def test_branch_examples(self):
        assert branch_sequences(0) == [(1,), (0,)]
        assert branch_sequences(1) == [(1, 1), (1, 0), (0, 1)]
        assert branch_sequences(2) == [(1, 1, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1), (0, 1, 0)]

    @pytest.mark.parametrize("n", range(21))
    def test_branch_count(self, n):
        branches = branch_sequences(n)
        assert len(branches) == fib(n + 3)
        assert len(set(branches)) == len(branches)

    @pytest.mark.parametrize("n", range(16))
    def test_branches_equal_support(self, n):
        """분기 집합 = A_n (직접 정의)"""
        assert set(branch_sequences(n)) == build_support_direct(n)

    def test_no_adjacent_zeros(self):
        for branch in branch_sequences(12):
            assert all(branch[k] or branch[k + 1] for k in range(len(branch) - 1))

    def test_branch_guard(self):
        with pytest.raises(ResourceLimitError, match=r"\|A_40\| = fib\(43\) = 433494437"):
            branch_sequences(40)
        with pytest.raises(ResourceLimitError):
            branch_sequences(5, max_support=12)
        with pytest.raises(DomainError):
            branch_sequences(-1)
