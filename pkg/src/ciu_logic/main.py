#!/usr/bin/env python3
"""
Ciu^n 행렬/쌍값 의미론 검사기
Main Application Entry Point
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from pydantic import ValidationError

from . import __version__
from .models import render_value
from .oracles import MatrixOracle
from .services import ConsequenceService
from .tools.fibword import expansion_levels, fib
from .tools.matrix import build_matrix, export_json, find_isomorphism, format_tables, import_json, materialize
from .tools.parser import parse, parse_sequent
from .utils import Settings, app_logger, build_settings, set_log_level
from .utils.errors import CiuLogicError, ResourceLimitError

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_LIMIT = 3
EXIT_DISAGREE = 4


def _fail(message: str) -> None:
    print(f"❌ {message}", file=sys.stderr)


def cmd_gen(args: argparse.Namespace, cfg: Settings) -> int:
    """M_n 생성 및 출력"""
    g = materialize(build_matrix(args.n, cfg.max_support), cfg.max_table_entries)
    fmt = args.format or cfg.output_format
    text = export_json(g) if fmt == "json" else format_tables(g)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        app_logger.info(f"행렬 M_{args.n} 저장: {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _print_verdict(verdict) -> None:
    status = "holds" if verdict.holds else "does not hold"
    print(f"[{verdict.oracle}] n={verdict.n}: {status} (examined {verdict.examined})")
    if verdict.countermodel is not None:
        print("countermodel:")
        for line in verdict.countermodel.render_lines():
            print(f"  {line}")


def cmd_entails(args: argparse.Namespace, cfg: Settings) -> int:
    """Γ ⊨ φ 판정"""
    sequent = parse_sequent(args.sequent)
    service = ConsequenceService(cfg)

    if args.oracle == "both":
        result = service.cross_check(args.n, sequent)
        _print_verdict(result.matrix)
        _print_verdict(result.bival)
        if not result.agree:
            print("oracles disagree")
            return EXIT_DISAGREE
        print("oracles agree")
        return EXIT_OK if result.matrix.holds else EXIT_NEGATIVE

    if args.oracle == "bival":
        verdict = service.entails_bival(args.n, sequent)
    else:
        verdict = service.entails_matrix(args.n, sequent)
    _print_verdict(verdict)
    return EXIT_OK if verdict.holds else EXIT_NEGATIVE


def cmd_taut(args: argparse.Namespace, cfg: Settings) -> int:
    """M_n 항진식 판정"""
    verdict = ConsequenceService(cfg).is_tautology(args.n, parse(args.formula))
    _print_verdict(verdict)
    return EXIT_OK if verdict.holds else EXIT_NEGATIVE


def cmd_truth_table(args: argparse.Namespace, cfg: Settings) -> int:
    """정규 순서 진리표 출력 (* = 지정값)"""
    oracle = MatrixOracle(args.n, cfg)
    for row in oracle.truth_table(parse(args.formula)):
        print(row.render())
    return EXIT_OK


def cmd_report(args: argparse.Namespace, cfg: Settings) -> int:
    """단계별 기수 및 초일관성 요약"""
    rows = ConsequenceService(cfg).summary_report(args.n_max)
    print(f"{'n':>3}  {'|A_n|':>8}  {'fib(n+3)':>8}  {'|D_n|':>8}  {'explosion':>9}  {'DNE':>5}")
    for row in rows:
        c, p = row.cardinality, row.paraconsistency
        mark = "" if row.expected else "  !"
        print(f"{c.n:>3}  {c.support_size:>8}  {c.fib_value:>8}  {c.designated_size:>8}  "
              f"{_yes_no(p.explosion):>9}  {_yes_no(p.dne):>5}{mark}")
    return EXIT_OK if all(row.expected for row in rows) else EXIT_NEGATIVE


def _yes_no(flag: bool) -> str:
    return "holds" if flag else "fails"


def cmd_iso(args: argparse.Namespace, cfg: Settings) -> int:
    """두 행렬 JSON 사이의 동형 사상 탐색"""
    a = import_json(Path(args.path_a).read_text(encoding="utf-8"))
    b = import_json(Path(args.path_b).read_text(encoding="utf-8"))
    mapping = find_isomorphism(a, b, cfg.max_iso_size)
    if mapping is None:
        print("not isomorphic")
        return EXIT_NEGATIVE
    print("isomorphic")
    for i, j in enumerate(mapping):
        print(f"  {render_value(tuple(a.values[i]))} -> {render_value(tuple(b.values[j]))}")
    return EXIT_OK


def cmd_fib(args: argparse.Namespace, cfg: Settings) -> int:
    print(fib(args.k, cfg.max_fib_index))
    return EXIT_OK


def cmd_fib_word(args: argparse.Namespace, cfg: Settings) -> int:
    levels = expansion_levels(args.k, cfg.max_expansion)
    for word in (levels if args.levels else levels[-1:]):
        print(word)
    return EXIT_OK


def cmd_equiv_check(args: argparse.Namespace, cfg: Settings) -> int:
    """무작위 시퀀트로 두 의미론 비교"""
    report = ConsequenceService(cfg).equivalence_check(
        args.n, atom_count=args.atoms, max_depth=args.depth, samples=args.samples, seed=cfg.rng_seed
    )
    for result in report.disagreements:
        print(f"disagreement: {result.to_dict()['sequent']} "
              f"(matrix={result.matrix.holds}, bival={result.bival.holds})")
    print(f"checked {report.checked} sequents at n={report.n} (seed {report.seed}): "
          f"{'oracles agree' if report.ok else 'oracles disagree'}")
    return EXIT_OK if report.ok else EXIT_DISAGREE


def build_parser() -> argparse.ArgumentParser:
    """명령행 파서 구성"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--max-evals', type=int, help='질의당 최대 열거 값매김 수 (env: CIU_MAX_EVALS)')
    common.add_argument('--max-support', type=int, help='최대 |A_n|')
    common.add_argument('--jobs', type=int, help='병렬 열거 작업자 수')
    common.add_argument('--seed', type=int, help='표본 검사 난수 시드')
    common.add_argument('--debug', action='store_true', help='디버그 모드')

    parser = argparse.ArgumentParser(
        prog='ciu-logic',
        description="Ciu^n 행렬 및 쌍값 의미론 검사기",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
예제:
  ciu-logic gen 2 --format table
  ciu-logic entails 1 "p, ~p |- q"
  ciu-logic entails 2 "|- p -> p" --oracle both
  ciu-logic report 5
  ciu-logic fib-word 5 --levels
        """
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')

    subparsers = parser.add_subparsers(dest='command', help='사용 가능한 명령')

    gen_parser = subparsers.add_parser('gen', parents=[common], help='행렬 M_n 출력')
    gen_parser.add_argument('n', type=int)
    gen_parser.add_argument('--format', choices=['json', 'table'], help='출력 형식 (기본: 설정값)')
    gen_parser.add_argument('--out', help='출력 파일 경로')
    gen_parser.set_defaults(handler=cmd_gen)

    entails_parser = subparsers.add_parser('entails', parents=[common], help='귀결 판정')
    entails_parser.add_argument('n', type=int)
    entails_parser.add_argument('sequent', help='예: "p, ~p |- q"')
    entails_parser.add_argument('--oracle', default='matrix', choices=['matrix', 'bival', 'both'])
    entails_parser.set_defaults(handler=cmd_entails)

    taut_parser = subparsers.add_parser('taut', parents=[common], help='항진식 판정')
    taut_parser.add_argument('n', type=int)
    taut_parser.add_argument('formula')
    taut_parser.set_defaults(handler=cmd_taut)

    table_parser = subparsers.add_parser('truth-table', parents=[common], help='진리표 출력')
    table_parser.add_argument('n', type=int)
    table_parser.add_argument('formula')
    table_parser.set_defaults(handler=cmd_truth_table)

    report_parser = subparsers.add_parser('report', parents=[common], help='단계별 요약 보고')
    report_parser.add_argument('n_max', type=int)
    report_parser.set_defaults(handler=cmd_report)

    iso_parser = subparsers.add_parser('iso', parents=[common], help='행렬 동형 검사')
    iso_parser.add_argument('path_a')
    iso_parser.add_argument('path_b')
    iso_parser.set_defaults(handler=cmd_iso)

    fib_parser = subparsers.add_parser('fib', parents=[common], help='피보나치 수')
    fib_parser.add_argument('k', type=int)
    fib_parser.set_defaults(handler=cmd_fib)

    word_parser = subparsers.add_parser('fib-word', parents=[common], help='피보나치 이진 단어')
    word_parser.add_argument('k', type=int)
    word_parser.add_argument('--levels', action='store_true', help='W(1)..W(k) 모두 출력')
    word_parser.set_defaults(handler=cmd_fib_word)

    equiv_parser = subparsers.add_parser('equiv-check', parents=[common], help='두 의미론 무작위 교차 검사')
    equiv_parser.add_argument('n', type=int)
    equiv_parser.add_argument('--atoms', type=int, default=2)
    equiv_parser.add_argument('--depth', type=int, default=4)
    equiv_parser.add_argument('--samples', type=int, default=100)
    equiv_parser.set_defaults(handler=cmd_equiv_check)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """메인 함수"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    if not args.command:
        parser.print_help()
        return EXIT_USAGE

    try:
        cfg = build_settings(
            max_evals=args.max_evals,
            max_support=args.max_support,
            jobs=args.jobs,
            rng_seed=args.seed,
        )
        set_log_level("DEBUG" if args.debug else cfg.log_level)
        return args.handler(args, cfg)
    except ResourceLimitError as e:
        _fail(f"resource limit: {e}")
        return EXIT_LIMIT
    except (CiuLogicError, ValidationError, OSError) as e:
        _fail(str(e))
        return EXIT_USAGE
    except Exception as e:
        app_logger.exception(f"메인 실행 오류: {str(e)}")
        _fail(f"unexpected error: {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
