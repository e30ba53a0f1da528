"""Command implementations. Each returns a process exit code."""

import argparse
import json
import logging
from typing import Any, Dict, List, TextIO, Tuple

from cli.rendering import (
    OutputFormat,
    arrows_payload,
    format_arrow,
    format_pairs,
    star_pattern,
    write_json,
)
from config.settings import Settings
from digraph_matrix.generation import generic_matrix, numeric_generated_support
from groupoid_spectrum.emission import write_pi_csv
from groupoid_spectrum.gsets import read_arrows
from groupoid_spectrum.groupoid import tail_groupoid
from groupoid_spectrum.orders import (
    OrderRelation,
    check_partial_order,
    comparator_for,
    order_from_comparator,
)
from groupoid_spectrum.principal import principal_generator
from groupoid_spectrum.words import alphabet_from_tower, kinds_from_tower
from relation_core.closure import generated_support, ideal_closure
from relation_core.errors import ContainmentError, PayloadFormatError
from relation_core.export import relation_to_dot
from relation_core.ideals import corner_generator, enumerate_ideals, full_sum_generator
from relation_core.lattice import invariant_projections
from relation_core.pairs import IdealSet
from relation_core.payloads import (
    ideal_to_payload,
    pair_set_from_payload,
    pair_set_to_payload,
    projection_to_payload,
    relation_from_payload,
)
from tower.embedding import lift_support
from tower.inductivity import (
    find_enlargement_witness,
    inductivity_report,
    lift_through,
)
from tower.lattice import persistent_projections
from tower.models import Tower

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_BOUND_EXCEEDED = 3
EXIT_UNEXPECTED = 4

VERIFIED_MARKER = "PRINCIPAL-VERIFIED"
NOT_VERIFIED_MARKER = "NOT-VERIFIED"

logger = logging.getLogger("cli.commands")


def load_json(path: str) -> Any:
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def cmd_ideals(args: argparse.Namespace, settings: Settings, stream: TextIO) -> int:
    relation = relation_from_payload(
        load_json(args.relation),
        max_size=settings.bounds.relation_max_size,
        close=args.close,
    )
    ideals = enumerate_ideals(relation, max_size=settings.bounds.enumeration_max_size)
    logger.info("Enumerated %s ideals for n=%s", len(ideals), relation.n)

    if args.format == OutputFormat.JSON:
        write_json(
            {
                "count": len(ideals),
                "ideals": [
                    {
                        **ideal_to_payload(ideal),
                        "full_sum": [list(p) for p in full_sum_generator(ideal).pairs],
                        "corners": [
                            list(p) for p in corner_generator(relation, ideal).pairs
                        ],
                    }
                    for ideal in ideals
                ],
            },
            stream,
        )
    elif args.format == OutputFormat.DOT:
        for ideal in ideals:
            stream.write(relation_to_dot(relation, ideal))
            stream.write("\n")
    else:
        print(f"Ideals: {len(ideals)}", file=stream)
        for number, ideal in enumerate(ideals, start=1):
            print(
                f"[{number}] size={len(ideal)} pairs={format_pairs(ideal.pairs)}",
                file=stream,
            )
            print(
                f"    full-sum generator: {format_pairs(full_sum_generator(ideal).pairs)}",
                file=stream,
            )
            print(
                "    corner generator:   "
                f"{format_pairs(corner_generator(relation, ideal).pairs)}",
                file=stream,
            )
            if args.format == OutputFormat.PRETTY and not ideal.is_empty():
                for line in star_pattern(ideal.support).splitlines():
                    print(f"    {line}", file=stream)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, settings: Settings, stream: TextIO) -> int:
    max_size = settings.bounds.relation_max_size
    relation = relation_from_payload(load_json(args.relation), max_size=max_size)
    ideal_pairs = pair_set_from_payload(load_json(args.ideal), max_size=max_size)
    generator = pair_set_from_payload(load_json(args.generator), max_size=max_size)

    if ideal_pairs.n != relation.n or generator.n != relation.n:
        raise PayloadFormatError("Relation, ideal and generator sizes differ")
    if not ideal_pairs.issubset(relation):
        raise ContainmentError(
            f"Ideal pairs {ideal_pairs.difference(relation).pairs} are outside P"
        )
    if not generator.issubset(ideal_pairs):
        raise ContainmentError(
            f"Generator pairs {generator.difference(ideal_pairs).pairs} are outside F"
        )
    ideal = IdealSet(relation, ideal_pairs)

    generated = generated_support(relation, generator)
    verified = generated == ideal
    numeric_agrees = None
    if args.numeric:
        numeric = numeric_generated_support(relation, generic_matrix(generator))
        numeric_agrees = numeric == generated.support

    missing = ideal.support.difference(generated.support)
    extra = generated.support.difference(ideal.support)

    if args.format == OutputFormat.JSON:
        payload: Dict[str, Any] = {
            "verified": verified,
            "generated": pair_set_to_payload(generated.support),
            "missing": [list(p) for p in missing.pairs],
            "extra": [list(p) for p in extra.pairs],
        }
        if numeric_agrees is not None:
            payload["numeric_agrees"] = numeric_agrees
        write_json(payload, stream)
    else:
        if verified:
            print(VERIFIED_MARKER, file=stream)
        else:
            print(NOT_VERIFIED_MARKER, file=stream)
            print(f"unreachable: {format_pairs(missing.pairs)}", file=stream)
            print(f"extra:       {format_pairs(extra.pairs)}", file=stream)
        if numeric_agrees is not None:
            print(f"numeric oracle agrees: {numeric_agrees}", file=stream)

    if not verified or numeric_agrees is False:
        return EXIT_VERIFICATION_FAILED
    return EXIT_OK


def cmd_tower_lift(args: argparse.Namespace, settings: Settings, stream: TextIO) -> int:
    tower = _load_tower(args.tower, args.depth, settings)
    rows: List[Dict[str, Any]] = []
    for level in range(1, args.depth):
        spec = tower.embedding(level)
        relation = tower.level_relation(level)
        lifted = lift_support(spec, relation)
        rows.append(
            {
                "level": level,
                "kind": spec.kind,
                "q": spec.multiplicity,
                "size": relation.n,
                "next_size": lifted.n,
                "lifted_pairs": len(lifted),
                "inside_next_level": lifted.issubset(tower.level_relation(level + 1)),
            }
        )

    if args.format == OutputFormat.JSON:
        write_json({"tower": tower.to_payload(), "levels": rows}, stream)
    else:
        for row in rows:
            print(
                f"level {row['level']} -> {row['level'] + 1}: {row['kind']} q={row['q']}, "
                f"T_{row['size']} lifts to {row['lifted_pairs']} pairs in size "
                f"{row['next_size']}, inside T_{row['next_size']}: "
                f"{row['inside_next_level']}",
                file=stream,
            )
    return EXIT_OK


def cmd_tower_lat(args: argparse.Namespace, settings: Settings, stream: TextIO) -> int:
    tower = _load_tower(args.tower, args.depth, settings)
    survivors = persistent_projections(
        tower,
        args.depth,
        max_depth=settings.bounds.tower_max_depth,
        max_top_size=settings.bounds.tower_max_top_size,
        max_count=settings.bounds.projection_max_count,
    )
    invariant_counts = [
        len(
            invariant_projections(
                tower.level_relation(level),
                max_count=settings.bounds.projection_max_count,
            )
        )
        for level in range(1, args.depth + 1)
    ]

    if args.format == OutputFormat.JSON:
        write_json(
            {
                "depth": args.depth,
                "levels": [
                    {
                        "level": level,
                        "size": tower.level_size(level),
                        "invariant": invariant_counts[level - 1],
                        "persistent": [projection_to_payload(p) for p in kept],
                    }
                    for level, kept in enumerate(survivors, start=1)
                ],
            },
            stream,
        )
    else:
        for level, kept in enumerate(survivors, start=1):
            print(
                f"level {level}: size {tower.level_size(level)}, "
                f"invariant {invariant_counts[level - 1]}, persistent {len(kept)}",
                file=stream,
            )
    return EXIT_OK


def cmd_tower_inductivity(
    args: argparse.Namespace, settings: Settings, stream: TextIO
) -> int:
    tower = _load_tower(args.tower, args.depth, settings)
    level = args.level or args.depth
    seed = pair_set_from_payload(
        load_json(args.ideal), max_size=settings.bounds.tower_max_top_size
    )
    if seed.n != tower.level_size(level):
        raise PayloadFormatError(
            f"Ideal of size {seed.n} does not live at level {level}"
        )
    start = ideal_closure(tower.level_relation(level), seed)
    top_ideal = lift_through(tower, start, level, args.depth)

    report = inductivity_report(
        tower,
        top_ideal,
        args.depth,
        max_depth=settings.bounds.tower_max_depth,
        max_top_size=settings.bounds.tower_max_top_size,
    )

    if args.format == OutputFormat.JSON:
        write_json(
            {
                "depth": report.depth,
                "pullback_sizes": [len(piece) for piece in report.pullbacks],
                "inductive": report.holds,
            },
            stream,
        )
    else:
        for number, piece in enumerate(report.pullbacks, start=1):
            print(f"level {number}: pullback of {len(piece)} pairs", file=stream)
        print("INDUCTIVE" if report.holds else "NOT-INDUCTIVE", file=stream)
    return EXIT_OK if report.holds else EXIT_VERIFICATION_FAILED


def cmd_tower_witness(
    args: argparse.Namespace, settings: Settings, stream: TextIO
) -> int:
    witness = find_enlargement_witness(
        seed=args.seed,
        max_size=args.max_size,
        enumeration_max_size=settings.bounds.enumeration_max_size,
    )
    if witness is None:
        print("No enlargement witness found", file=stream)
        return EXIT_VERIFICATION_FAILED

    if args.format == OutputFormat.JSON:
        write_json(
            {
                "seed": args.seed,
                "relation": pair_set_to_payload(witness.relation),
                "ideal": [list(p) for p in witness.ideal.pairs],
                "embedding": witness.spec.to_payload(),
                "recovered": [list(p) for p in witness.recovered.pairs],
                "added": [list(p) for p in witness.added_pairs],
            },
            stream,
        )
    else:
        print(f"relation:  {format_pairs(witness.relation.pairs)}", file=stream)
        print(f"ideal:     {format_pairs(witness.ideal.pairs)}", file=stream)
        print(
            f"embedding: {witness.spec.kind} q={witness.spec.multiplicity}",
            file=stream,
        )
        print(f"recovered: {format_pairs(witness.recovered.pairs)}", file=stream)
        print(f"added:     {format_pairs(witness.added_pairs)}", file=stream)
    return EXIT_OK


def cmd_spectrum_emit(
    args: argparse.Namespace, settings: Settings, stream: TextIO
) -> int:
    tower, order = _load_order(args, settings)
    rows = write_pi_csv(order.pairs, order.alphabet, stream)
    logger.info("Wrote %s pi-map rows for depth %s", rows, args.depth)
    return EXIT_OK


def cmd_spectrum_generator(
    args: argparse.Namespace, settings: Settings, stream: TextIO
) -> int:
    tower, order = _load_order(args, settings)
    payload = load_json(args.ideal_set)
    if not isinstance(payload, dict):
        raise PayloadFormatError("Ideal set payload must be a JSON object")
    ideal_set = frozenset(read_arrows(payload.get("pairs")))

    result = principal_generator(order, ideal_set, listing=args.listing)

    if args.format == OutputFormat.JSON:
        write_json(
            {
                "listing": result.listing,
                "generator": result.generator.to_payload(),
                "compression": [
                    {"position": check.position, "holds": check.holds}
                    for check in result.compression_checks
                ],
                "generated": arrows_payload(result.generated_support),
                "verified": result.verified,
            },
            stream,
        )
    else:
        print(
            f"units listed: {len(result.units)}, kept after subordinate deletion: "
            f"{len(result.kept_units)}",
            file=stream,
        )
        for check in result.compression_checks:
            arrows = ", ".join(format_arrow(a) for a in check.gset.sorted_pairs)
            print(
                f"E_{check.position} coefficient 1/{2 ** check.position} "
                f"compression={'ok' if check.holds else 'FAILED'}: {arrows}",
                file=stream,
            )
        print(f"generated ideal matches: {result.generates_ideal}", file=stream)
        print(VERIFIED_MARKER if result.verified else NOT_VERIFIED_MARKER, file=stream)
    return EXIT_OK if result.verified else EXIT_VERIFICATION_FAILED


def cmd_spectrum_check(
    args: argparse.Namespace, settings: Settings, stream: TextIO
) -> int:
    tower, order = _load_order(args, settings)
    report = check_partial_order(order)
    groupoid = tail_groupoid(order.alphabet, settings.bounds.groupoid_max_words)
    violations = groupoid.axiom_violations()

    if args.format == OutputFormat.JSON:
        write_json(
            {
                "order": args.order,
                "depth": args.depth,
                "is_partial": report.is_partial,
                "is_total": report.is_total,
                "is_equivalence": report.is_equivalence,
                "groupoid_violations": violations,
            },
            stream,
        )
    else:
        print(f"order {args.order} at depth {args.depth}", file=stream)
        print(f"partial order: {report.is_partial}", file=stream)
        print(f"total order:   {report.is_total}", file=stream)
        print(f"equivalence:   {report.is_equivalence}", file=stream)
        print(f"groupoid axiom violations: {len(violations)}", file=stream)
    if violations or not report.is_total:
        return EXIT_VERIFICATION_FAILED
    return EXIT_OK


def _load_tower(path: str, depth: int, settings: Settings) -> Tower:
    tower = Tower.from_payload(load_json(path))
    tower.check_depth(
        depth,
        max_depth=settings.bounds.tower_max_depth,
        max_top_size=settings.bounds.tower_max_top_size,
    )
    return tower


def _load_order(
    args: argparse.Namespace, settings: Settings
) -> Tuple[Tower, OrderRelation]:
    tower = _load_tower(args.tower, args.depth, settings)
    alphabet = alphabet_from_tower(tower, args.depth)
    tower_kinds = kinds_from_tower(tower, args.depth)
    comparator = comparator_for(args.order, alphabet, tower_kinds)
    order = order_from_comparator(
        alphabet, comparator, max_words=settings.bounds.groupoid_max_words
    )
    return tower, order

