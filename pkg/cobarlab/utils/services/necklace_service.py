import logging

from itertools import combinations_with_replacement
from typing import Iterator, List, Optional, Sequence

from model import BoxMorphism, Necklace, NecklaceMorphism
from utils.enums import GeneratorType
from utils.errors import EnumerationBoundError, InvalidStructureError

logger = logging.getLogger(__name__)


def identity(T: Necklace) -> NecklaceMorphism:
    return NecklaceMorphism(T, T, tuple(range(T.vertex_count)))


def compose(g: NecklaceMorphism, f: NecklaceMorphism) -> NecklaceMorphism:
    """g ∘ f"""

    if f.target != g.source:
        raise InvalidStructureError(f"cannot compose {f} with {g}")
    return NecklaceMorphism(f.source, g.target, tuple(g(f(v)) for v in range(f.source.vertex_count)))


def compose_all(generators: Sequence[NecklaceMorphism], source: Optional[Necklace] = None) -> NecklaceMorphism:
    """Composite generators[0] ∘ generators[1] ∘ ... ; the identity of ``source`` for an empty list."""

    if not generators:
        if source is None:
            raise InvalidStructureError("empty composite needs a source necklace")
        return identity(source)
    out = generators[-1]
    for g in reversed(generators[:-1]):
        out = compose(g, out)
    return out


def _merge_map(vertex_count: int, v: int) -> tuple:
    return tuple(u if u <= v else u - 1 for u in range(vertex_count))


def _merged_beads(T: Necklace, v: int) -> tuple:
    """Bead list after identifying vertices v and v+1 of T."""

    i = T.bead_containing(v, v + 1)
    beads = list(T.beads)
    if beads[i] == 1:
        del beads[i]
    else:
        beads[i] -= 1
    return tuple(beads)


def classify(f: NecklaceMorphism) -> Optional[GeneratorType]:
    """Generator type of f, or None if f is not one of the generating morphisms."""

    T, U = f.source, f.target
    if f.is_injective:
        if len(U.non_joints) - len(T.non_joints) == 1:
            return GeneratorType.INJECTIVE
        return None
    merges = [v for v in range(T.last) if f(v) == f(v + 1)]
    if len(merges) != 1:
        return None
    v = merges[0]
    if f.vertex_map != _merge_map(T.vertex_count, v) or U.beads != _merged_beads(T, v):
        return None
    if T.beads[T.bead_containing(v, v + 1)] == 1:
        return GeneratorType.COLLAPSE
    return GeneratorType.CODEGENERACY


def _split_injective(t: NecklaceMorphism) -> List[NecklaceMorphism]:
    """Writes an injective morphism as a composite of injective generators, left factors first."""

    out: List[NecklaceMorphism] = []
    while not t.is_identity:
        T, U = t.source, t.target
        image_joints = {t(j) for j in T.joints}
        extra = [j for j in T.joints if t(j) not in U.joints]
        if extra:
            # forget the first joint landing on a non-joint
            j = extra[0]
            joints = [a for a in T.joints if a != j]
            middle = Necklace(tuple(b - a for a, b in zip(joints, joints[1:])))
            step = NecklaceMorphism(T, middle, tuple(range(T.vertex_count)))
            t = NecklaceMorphism(middle, U, t.vertex_map)
        else:
            if not image_joints >= set(U.joints):
                raise InvalidStructureError(f"{t} misses a joint of its target")
            image = set(t.vertex_map)
            missed = next(y for y in range(U.vertex_count) if y not in image)
            vertices = sorted(image | {missed})
            position = {y: i for i, y in enumerate(vertices)}
            joints = [position[y] for y in U.joints]
            middle = Necklace(tuple(b - a for a, b in zip(joints, joints[1:])))
            step = NecklaceMorphism(T, middle, tuple(position[y] for y in t.vertex_map))
            t = NecklaceMorphism(middle, U, tuple(vertices))
        out.append(step)
    out.reverse()
    return out


def factorize(f: NecklaceMorphism) -> List[NecklaceMorphism]:
    """Factors a necklace morphism into generators.

    Parameters
    ----------
    f : NecklaceMorphism
        Any morphism of necklaces

    Returns
    -------
    list of NecklaceMorphism
        Generators g_1, ..., g_r with f = g_1 ∘ ... ∘ g_r. The identity gives the empty list.
    """

    merges: List[NecklaceMorphism] = []
    current, rest = f.source, f.vertex_map
    while True:
        v = next((u for u in range(current.last) if rest[u] == rest[u + 1]), None)
        if v is None:
            break
        smaller = Necklace(_merged_beads(current, v))
        merges.append(NecklaceMorphism(current, smaller, _merge_map(current.vertex_count, v)))
        rest = rest[:v + 1] + rest[v + 2:]
        current = smaller
    injective = _split_injective(NecklaceMorphism(current, f.target, rest))
    generators = injective + merges[::-1]
    logger.debug("factorized %s into %d generators", f, len(generators))
    return generators


def p1_of_generator(g: NecklaceMorphism) -> BoxMorphism:
    T, U = g.source, g.target
    N = len(T.non_joints)
    kind = classify(g)
    if kind is None:
        raise InvalidStructureError(f"{g} is not a generator")
    if kind == GeneratorType.COLLAPSE:
        return BoxMorphism.identity(N)
    if kind == GeneratorType.INJECTIVE:
        targets = U.non_joints
        for j in T.joints:
            if g(j) in targets:
                return BoxMorphism.coface(N, targets.index(g(j)) + 1, 1)
        image = set(g.vertex_map)
        missed = next(y for y in targets if y not in image)
        return BoxMorphism.coface(N, targets.index(missed) + 1, 0)
    v = next(u for u in range(T.last) if g(u) == g(u + 1))
    sources = T.non_joints
    if v in sources and v + 1 in sources:
        return BoxMorphism.coconnection(N, sources.index(v) + 1)
    return BoxMorphism.codegeneracy(N, sources.index(v if v in sources else v + 1) + 1)


def p1_of_morphism(f: NecklaceMorphism) -> BoxMorphism:
    """The box category map of f, assembled from its generator factorization."""

    out = BoxMorphism.identity(len(f.source.non_joints))
    for g in reversed(factorize(f)):
        out = p1_of_generator(g) @ out
    return out


def p1_direct(f: NecklaceMorphism) -> BoxMorphism:
    """The box category map of f read off from images of vertex subsets containing the joints."""

    T, U = f.source, f.target
    sources, targets = T.non_joints, U.non_joints

    def on_vertex(s):
        chosen = set(T.joints) | {y for y, bit in zip(sources, s) if bit}
        image = {f(v) for v in chosen}
        return tuple(int(y in image) for y in targets)

    return BoxMorphism.from_function(len(sources), len(targets), on_vertex)


def necklaces(vertex_count: int) -> Iterator[Necklace]:
    """All necklaces with the given number of vertices, ordered by bead list."""

    if vertex_count < 1:
        return

    def compositions(total: int) -> Iterator[tuple]:
        if total == 0:
            yield ()
            return
        for first in range(1, total + 1):
            for tail in compositions(total - first):
                yield (first,) + tail

    for beads in sorted(compositions(vertex_count - 1)):
        yield Necklace(beads)


def enumerate_morphisms(T: Necklace, U: Necklace, bound: int = 8) -> List[NecklaceMorphism]:
    """All necklace morphisms T -> U in lexicographic order of vertex maps."""

    if max(T.vertex_count, U.vertex_count) > bound:
        raise EnumerationBoundError(f"{T} -> {U} exceeds the necklace bound of {bound} vertices")
    out = []
    for vertex_map in combinations_with_replacement(range(U.vertex_count), T.vertex_count):
        if vertex_map[0] != 0 or vertex_map[-1] != U.last:
            continue
        try:
            out.append(NecklaceMorphism(T, U, vertex_map))
        except InvalidStructureError:
            continue
    return out
