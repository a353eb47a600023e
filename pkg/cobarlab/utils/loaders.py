import json
import logging

from pathlib import Path
from typing import Any, Dict, Tuple, Union

from pydantic import BaseModel, ValidationError

from model import CubicalSetFG, DGCategory, HomSpace, SimplicialSet
from model.files import (CUBICAL_FORMAT, DG_CATEGORY_FORMAT, SIMPLICIAL_FORMAT, CellEntry, CompositionEntry,
                         CubeFaceEntry, CubicalSetFile, DGCategoryFile, FaceEntry, HomBasisEntry, HomEntry,
                         SimplexEntry, SimplicialSetFile)
from utils import digest
from utils.errors import InputError, InvalidStructureError
from utils.services import cubical_service, dgnerve_service, simplicial_service

logger = logging.getLogger(__name__)

Structure = Union[SimplicialSet, CubicalSetFG, DGCategory]


def _location(error: ValidationError) -> str:
    first = error.errors()[0]
    return "$" + "".join(f"[{p}]" if isinstance(p, int) else f".{p}" for p in first["loc"])


def _parse(schema: type, document: Any) -> BaseModel:
    try:
        return schema.model_validate(document)
    except ValidationError as e:
        raise InputError(e.errors()[0]["msg"], _location(e))


def read_document(path: Union[str, Path]) -> Tuple[Dict[str, Any], str]:
    """Reads a JSON file, returning the document and the sha256 of its bytes."""

    try:
        raw = Path(path).read_bytes()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}")
    try:
        document = json.loads(raw)
    except json.JSONDecodeError as e:
        raise InputError(e.msg, f"{path}:{e.lineno}:{e.colno}")
    except UnicodeDecodeError:
        raise InputError(f"{path} is not UTF-8 text")
    if not isinstance(document, dict):
        raise InputError("top level must be a JSON object", str(path))
    return document, digest(raw)


def detect_format(document: Dict[str, Any]) -> str:
    if "format" in document:
        fmt = document["format"]
        if fmt not in (SIMPLICIAL_FORMAT, CUBICAL_FORMAT, DG_CATEGORY_FORMAT):
            raise InputError(f"unknown format '{fmt}'", "$.format")
        return fmt
    if "simplices" in document:
        return SIMPLICIAL_FORMAT
    if "cells" in document:
        return CUBICAL_FORMAT
    if "homs" in document or "prime" in document:
        return DG_CATEGORY_FORMAT
    raise InputError("cannot tell the input format, expected a 'format' field")


def simplicial_from_document(document: Dict[str, Any]) -> SimplicialSet:
    data: SimplicialSetFile = _parse(SimplicialSetFile, document)
    entries = [(s.id, s.dim, [(tuple(f.word), f.base) for f in s.faces]) for s in data.simplices]
    S = simplicial_service.assemble(data.name, entries, data.basepoint)
    simplicial_service.validate(S)
    return S


def cubical_from_document(document: Dict[str, Any]) -> CubicalSetFG:
    data: CubicalSetFile = _parse(CubicalSetFile, document)
    entries = [(c.id, c.dim, {key: (tuple(f.word), f.base) for key, f in c.face_items()}) for c in data.cells]
    K = cubical_service.assemble_cubical(data.name, entries, data.basepoint)
    cubical_service.validate(K)
    return K


def _vector(labels: Tuple[str, ...], values: Dict[str, int], prime: int, where: str) -> Tuple[int, ...]:
    out = [0] * len(labels)
    for label, c in values.items():
        if label not in labels:
            raise InvalidStructureError(f"unknown basis label '{label}' in {where}")
        out[labels.index(label)] = c % prime
    return tuple(out)


def dg_category_from_document(document: Dict[str, Any]) -> DGCategory:
    data: DGCategoryFile = _parse(DGCategoryFile, document)
    p = data.prime
    homs = {}
    for entry in data.homs:
        if entry.source not in data.objects or entry.target not in data.objects:
            raise InvalidStructureError(f"hom({entry.source},{entry.target}) names an unknown object", data.name)
        labels = tuple(b.label for b in entry.basis)
        degrees = tuple(b.degree for b in entry.basis)
        where = f"hom({entry.source},{entry.target})"
        differential = tuple(_vector(labels, entry.differential.get(label, {}), p, where) for label in labels)
        homs[(entry.source, entry.target)] = HomSpace(entry.source, entry.target, labels, degrees, differential)

    def labels_of(X: str, Y: str) -> Tuple[str, ...]:
        return homs[(X, Y)].labels if (X, Y) in homs else ()

    composition: Dict[Tuple[str, str, str], Dict[Tuple[int, int], Tuple[int, ...]]] = {}
    for entry in data.composition:
        (Y, Z, g), (X, Y2, f) = entry.outer, entry.inner
        if Y != Y2:
            raise InvalidStructureError(f"composition {entry.outer} ∘ {entry.inner} is not composable", data.name)
        outer, inner = labels_of(Y, Z), labels_of(X, Y)
        if g not in outer or f not in inner:
            raise InvalidStructureError(f"composition {entry.outer} ∘ {entry.inner} uses an unknown label", data.name)
        value = _vector(labels_of(X, Z), entry.value, p, f"hom({X},{Z})")
        composition.setdefault((X, Y, Z), {})[(outer.index(g), inner.index(f))] = value
    identities = {X: _vector(labels_of(X, X), values, p, f"hom({X},{X})") for X, values in data.identities.items()}
    return dgnerve_service.make_category(data.name, p, data.objects, homs, composition, identities)


def load(path: Union[str, Path]) -> Tuple[Structure, str]:
    """Parses any supported input file; returns the structure and the input digest."""

    document, sha = read_document(path)
    fmt = detect_format(document)
    if fmt == SIMPLICIAL_FORMAT:
        structure = simplicial_from_document(document)
    elif fmt == CUBICAL_FORMAT:
        structure = cubical_from_document(document)
    else:
        structure = dg_category_from_document(document)
    logger.info("loaded %s (%s) from %s", structure.name, fmt, path)
    return structure, sha


def dump_simplicial(S: SimplicialSet) -> SimplicialSetFile:
    simplices = []
    for x in S.all_ids():
        faces = [FaceEntry(word=list(r.word), base=r.base) for r in S.faces.get(x, ())]
        simplices.append(SimplexEntry(id=x, dim=S.dim_of(x), faces=faces))
    return SimplicialSetFile(name=S.name, simplices=simplices, basepoint=S.basepoint)


def dump_cubical(K: CubicalSetFG) -> CubicalSetFile:
    cells = []
    for n in range(K.top_dim + 1):
        for c in K.nondegenerate(n):
            faces = {f"{j},{e}": CubeFaceEntry(word=list(r.word), base=r.base) for (j, e), r in K.faces[c].items()}
            cells.append(CellEntry(id=c, dim=n, faces=faces))
    return CubicalSetFile(name=K.name, cells=cells, basepoint=K.basepoint)


def dump_dg_category(C: DGCategory) -> DGCategoryFile:
    homs = []
    for (X, Y), hom in C.homs.items():
        if not hom.rank:
            continue
        differential = {}
        for label, v in zip(hom.labels, hom.differential):
            if any(v):
                differential[label] = {hom.labels[k]: c for k, c in enumerate(v) if c}
        basis = [HomBasisEntry(label=label, degree=d) for label, d in zip(hom.labels, hom.degrees)]
        homs.append(HomEntry(source=X, target=Y, basis=basis, differential=differential))
    composition = []
    for (X, Y, Z), table in C.composition.items():
        for (i, j), value in sorted(table.items()):
            target = C.hom(X, Z)
            composition.append(CompositionEntry(outer=(Y, Z, C.hom(Y, Z).labels[i]),
                                                inner=(X, Y, C.hom(X, Y).labels[j]),
                                                value={target.labels[k]: c for k, c in enumerate(value) if c}))
    identities = {X: {C.hom(X, X).labels[k]: c for k, c in enumerate(v) if c} for X, v in C.identities.items()}
    return DGCategoryFile(name=C.name, prime=C.prime, objects=list(C.objects), homs=homs, composition=composition,
                          identities=identities)


def dump(structure: Structure) -> Dict[str, Any]:
    if isinstance(structure, SimplicialSet):
        data = dump_simplicial(structure)
    elif isinstance(structure, CubicalSetFG):
        data = dump_cubical(structure)
    else:
        data = dump_dg_category(structure)
    return data.model_dump(mode="json")
