"""Passage serialization: XML, plain text and bi-lexical dependencies.

The XML layout:

    <root passageID="...">
      <layer layerID="0">
        <node ID="0.1" type="Word">
          <attributes text="..." paragraph="1" paragraph_position="1"/>
        </node>
        ...
      </layer>
      <layer layerID="1">
        <node ID="1.1" type="FN">
          <edge toID="0.1" type="L"/>
          <edge toID="0.4" type="A"><attributes remote="True"/></edge>
        </node>
        <node ID="1.5" type="FN"><attributes implicit="True"/></node>
      </layer>
    </root>

Terminal order in layer 0 is document order and defines token positions.
The root unit is the unique layer-1 node with no incoming edge.

The bi-lexical export is lossy by design: remote edges and implicit nodes
are dropped, and each unit is collapsed onto a lexical head chosen by a
fixed category priority.
"""
from __future__ import annotations

import xml.etree.ElementTree as ET
from dataclasses import dataclass

from .categories import Category
from .errors import DanglingReference, XmlFormatError, XmlSyntax
from .graph import Node, NodeId, NodeKind, Passage, is_punctuation

# -- XML ------------------------------------------------------------------


def parse_xml(document: bytes | str) -> Passage:
    """Read one passage document and return it sealed."""
    try:
        root = ET.fromstring(document)
    except ET.ParseError as exc:
        raise XmlSyntax(f"malformed XML: {exc}") from None
    if root.tag != "root" or "passageID" not in root.attrib:
        raise XmlFormatError("expected a <root passageID=...> document element")
    passage_id = root.attrib["passageID"]

    layers = {layer.attrib.get("layerID"): layer for layer in root.findall("layer")}
    if "0" not in layers or "1" not in layers:
        raise XmlFormatError("document must contain layers 0 and 1")

    tokens = []
    for position, node in enumerate(layers["0"].findall("node"), start=1):
        nid = node.attrib.get("ID", "")
        if nid != f"0.{position}":
            raise XmlFormatError(f"terminal {position} has ID {nid!r}, expected 0.{position}")
        attributes = node.find("attributes")
        if attributes is None or "text" not in attributes.attrib:
            raise XmlFormatError(f"terminal {nid} lacks a text attribute")
        tokens.append(attributes.attrib["text"])

    units: list[tuple[NodeId, bool, list[tuple[str, str, bool]]]] = []
    referenced: set[str] = set()
    declared: set[str] = set()
    for node in layers["1"].findall("node"):
        try:
            nid = NodeId.parse(node.attrib.get("ID", ""))
        except Exception:
            raise XmlFormatError(f"bad unit ID: {node.attrib.get('ID')!r}") from None
        if str(nid) in declared:
            raise XmlFormatError(f"duplicate unit ID: {nid}")
        declared.add(str(nid))
        attributes = node.find("attributes")
        implicit = attributes is not None and attributes.attrib.get("implicit") == "True"
        edges = []
        for edge in node.findall("edge"):
            to_id = edge.attrib.get("toID")
            code = edge.attrib.get("type")
            if to_id is None or code is None:
                raise XmlFormatError(f"edge under {nid} lacks toID or type")
            edge_attrs = edge.find("attributes")
            remote = edge_attrs is not None and edge_attrs.attrib.get("remote") == "True"
            edges.append((to_id, code, remote))
            referenced.add(to_id)
        units.append((nid, implicit, edges))

    roots = [nid for nid, _, _ in units if str(nid) not in referenced]
    if len(roots) != 1:
        raise XmlFormatError(f"expected exactly one root unit, found {len(roots)}")

    passage = Passage(passage_id, tokens, root_id=roots[0])
    for nid, implicit, _ in units:
        if nid == passage.root:
            continue
        passage.add_node(NodeKind.IMPLICIT if implicit else NodeKind.NON_TERMINAL, node_id=nid)
    for nid, _, edges in units:
        for to_id, code, remote in edges:
            child = NodeId.parse(to_id)
            if child not in {n.id for n in passage.nodes}:
                raise DanglingReference(f"edge toID={to_id} is not a declared node")
            passage.add_edge(nid, child, Category.from_code(code), remote=remote)
    return passage.freeze()


def serialize_xml(passage: Passage) -> bytes:
    """Deterministic UTF-8 document: nodes in id order, edges in insertion
    order.  parse_xml(serialize_xml(p)) is structurally identical to p."""
    passage._require_sealed()
    root = ET.Element("root", passageID=passage.passage_id)
    layer0 = ET.SubElement(root, "layer", layerID="0")
    for terminal in passage.terminals:
        kind = "Punctuation" if is_punctuation(terminal.text) else "Word"
        node = ET.SubElement(layer0, "node", ID=str(terminal.id), type=kind)
        ET.SubElement(
            node,
            "attributes",
            text=terminal.text,
            paragraph="1",
            paragraph_position=str(terminal.position),
        )
    layer1 = ET.SubElement(root, "layer", layerID="1")
    units = sorted(
        (n for n in passage.nodes if not n.is_terminal), key=lambda n: n.id
    )
    for unit in units:
        node = ET.SubElement(layer1, "node", ID=str(unit.id), type="FN")
        if unit.kind is NodeKind.IMPLICIT:
            ET.SubElement(node, "attributes", implicit="True")
        for edge in passage.outgoing(unit.id):
            elem = ET.SubElement(node, "edge", toID=str(edge.child), type=edge.category.code)
            if edge.remote:
                ET.SubElement(elem, "attributes", remote="True")
    ET.indent(root)
    return ET.tostring(root, encoding="utf-8", xml_declaration=True) + b"\n"


# -- plain text -----------------------------------------------------------


def export_text(passage: Passage) -> str:
    """Tokens joined by single spaces in position order."""
    passage._require_sealed()
    return " ".join(passage.tokens)


# -- bi-lexical dependencies ----------------------------------------------

#: Category priority for picking a unit's lexical head (first match wins);
#: ties go to the child whose yield starts leftmost.
HEAD_PRIORITY = ["C", "P", "S", "H", "A", "D", "E", "N", "R", "L", "G", "F", "U"]

#: Relation used for the token heading the whole passage.
ROOT_DEPREL = "root"


@dataclass(frozen=True)
class BilexicalRow:
    position: int
    form: str
    head: int  # 0 = passage root
    deprel: str


def export_bilexical(passage: Passage) -> list[BilexicalRow]:
    """Collapse the graph to one head and relation per token.

    Each unit's lexical head is the head of its highest-priority primary
    child; a token depends on the head of the unit governing the maximal
    unit it heads, labeled with the category of the edge into that maximal
    unit.  Remote edges and implicit nodes are dropped.
    """
    passage._require_sealed()
    heads: dict[NodeId, Node | None] = {}

    def lexical_head(nid: NodeId) -> Node | None:
        if nid in heads:
            return heads[nid]
        node = passage.node(nid)
        if node.is_terminal:
            head = node
        elif node.kind is NodeKind.IMPLICIT:
            head = None
        else:
            best = None
            for edge in passage.outgoing(nid):
                if edge.remote:
                    continue
                span = passage.yield_of(edge.child)
                if not span:
                    continue
                rank = (HEAD_PRIORITY.index(edge.category.code), span[0])
                if best is None or rank < best[0]:
                    best = (rank, edge.child)
            head = lexical_head(best[1]) if best else None
        heads[nid] = head
        return head

    primary_parent: dict[NodeId, tuple[NodeId, str]] = {
        e.child: (e.parent, e.category.code) for e in passage.edges if not e.remote
    }

    rows = []
    for terminal in passage.terminals:
        unit: NodeId = terminal.id
        while unit != passage.root:
            parent, _ = primary_parent[unit]
            if lexical_head(parent) != terminal:
                break
            unit = parent
        if unit == passage.root:
            head, deprel = 0, ROOT_DEPREL
        else:
            parent, deprel = primary_parent[unit]
            governor = lexical_head(parent)
            head = governor.position
        rows.append(BilexicalRow(terminal.position, terminal.text, head, deprel))
    return rows


def render_bilexical(rows: list[BilexicalRow]) -> str:
    """Four tab-separated columns per row, trailing blank line."""
    lines = [f"{r.position}\t{r.form}\t{r.head}\t{r.deprel}" for r in rows]
    return "\n".join(lines) + "\n"
