"""
Textual grammar for ring descriptors and element literals.

    ring    := factor ('x' factor)*          left-associative direct product
    factor  := 'Z' ['/' INT] | 'M' INT '(' ring ')' | '(' ring ')'

    literal := INT | '(' literal ',' literal ')' | '[' literal (',' literal)* ']'

Whitespace is ignored everywhere. Errors point at the offending character.
"""
from .data_structures import Element, Integers, MatrixRing, Modular, Product, RingHandle
from .errors import DescriptorError

_PUNCTUATION = "()[],/"


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit() or (ch in "+-" and i + 1 < len(text) and text[i + 1].isdigit()):
            start = i
            i += 1
            while i < len(text) and text[i].isdigit():
                i += 1
            tokens.append(("INT", text[start:i], start))
            continue
        if ch in _PUNCTUATION:
            tokens.append((ch, ch, i))
        elif ch in "xX×":
            tokens.append(("x", ch, i))
        elif ch in "ZM":
            tokens.append((ch, ch, i))
        else:
            raise DescriptorError(f"unexpected character {ch!r}", text, i)
        i += 1
    tokens.append(("END", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind: str, what: str):
        tok = self.tokens[self.pos]
        if tok[0] != kind:
            found = "end of input" if tok[0] == "END" else repr(tok[1])
            raise DescriptorError(f"expected {what}, found {found}", self.text, tok[2])
        self.pos += 1
        return tok

    def finish(self):
        tok = self.peek()
        if tok[0] != "END":
            raise DescriptorError(f"unexpected trailing {tok[1]!r}", self.text, tok[2])

    # ring descriptors

    def ring(self) -> RingHandle:
        handle = self.factor()
        while self.peek()[0] == "x":
            self.pos += 1
            handle = Product(handle, self.factor())
        return handle

    def factor(self) -> RingHandle:
        tok = self.peek()
        if tok[0] == "Z":
            self.pos += 1
            if self.peek()[0] == "/":
                self.pos += 1
                n_tok = self.take("INT", "a modulus")
                n = int(n_tok[1])
                if n < 2:
                    raise DescriptorError("modulus must be at least 2", self.text, n_tok[2])
                return Modular(n)
            return Integers()
        if tok[0] == "M":
            self.pos += 1
            size_tok = self.take("INT", "a matrix size after 'M'")
            size = int(size_tok[1])
            if size < 1:
                raise DescriptorError("matrix size must be at least 1", self.text, size_tok[2])
            self.take("(", "'(' after the matrix size")
            base = self.ring()
            self.take(")", "')' closing the matrix base")
            return MatrixRing(base, size)
        if tok[0] == "(":
            self.pos += 1
            inner = self.ring()
            self.take(")", "')'")
            return inner
        found = "end of input" if tok[0] == "END" else repr(tok[1])
        raise DescriptorError(f"expected 'Z', 'M<size>(...)' or '(', found {found}", self.text, tok[2])

    # literals, parsed to (kind, payload, position) nodes

    def literal(self):
        tok = self.peek()
        if tok[0] == "INT":
            self.pos += 1
            return ("int", int(tok[1]), tok[2])
        if tok[0] in "([":
            close = ")" if tok[0] == "(" else "]"
            self.pos += 1
            items = [self.literal()]
            while self.peek()[0] == ",":
                self.pos += 1
                items.append(self.literal())
            self.take(close, f"',' or {close!r}")
            return ("tuple" if close == ")" else "list", items, tok[2])
        found = "end of input" if tok[0] == "END" else repr(tok[1])
        raise DescriptorError(f"expected an integer, '(' or '[', found {found}", self.text, tok[2])


def parse_ring(text: str) -> RingHandle:
    if not isinstance(text, str) or not text.strip():
        raise DescriptorError("empty ring descriptor")
    parser = _Parser(text)
    handle = parser.ring()
    parser.finish()
    return handle


def _node_to_raw(ring: RingHandle, node, text: str):
    kind, payload, position = node
    if isinstance(ring, (Integers, Modular)):
        if kind != "int":
            raise DescriptorError(f"{ring.descriptor()} expects an integer", text, position)
        return ring.canonical(payload)
    if isinstance(ring, Product):
        if kind != "tuple" or len(payload) != 2:
            raise DescriptorError(f"{ring.descriptor()} expects a pair '(a,b)'", text, position)
        return (_node_to_raw(ring.left, payload[0], text), _node_to_raw(ring.right, payload[1], text))
    if isinstance(ring, MatrixRing):
        if kind == "int" and ring.size == 1:
            return ((_node_to_raw(ring.base, node, text),),)
        if kind != "list" or len(payload) != ring.size:
            raise DescriptorError(f"{ring.descriptor()} expects {ring.size} rows in '[[..],[..]]' form", text, position)
        rows = []
        for row in payload:
            if row[0] != "list" or len(row[1]) != ring.size:
                raise DescriptorError(f"each row of {ring.descriptor()} needs {ring.size} entries", text, row[2])
            rows.append(tuple(_node_to_raw(ring.base, entry, text) for entry in row[1]))
        return tuple(rows)
    raise DescriptorError(f"no literal syntax for {ring!r}")


def parse_element(text: str, ring: RingHandle) -> Element:
    """Parse an element or matrix literal against ring; arbitrary-size integers are accepted."""
    if not isinstance(text, str) or not text.strip():
        raise DescriptorError("empty element literal")
    parser = _Parser(text)
    node = parser.literal()
    parser.finish()
    return Element(ring, _node_to_raw(ring, node, text))
