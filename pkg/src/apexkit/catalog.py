"""The 133 minor-minimal non-apex graphs of connectivity two.

Golden data: six blocks of graph6 words, one block per structural
class, in a fixed printed order.  The blocks are embedded verbatim and
guarded by a checksum so a stray edit cannot silently corrupt them.
Strings only here; decoding is the caller's business via ``graph()``.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from .graphs import Graph, decode_graph6
from .structure import (
    DISJOINT_CUTS,
    EXACTLY_TWO_CUTS,
    HEAVY_NONPLANAR,
    MULTI_CUTS_GE3,
    UNIQUE_CUT_NOSPLIT,
    UNIQUE_CUT_SPLIT,
)

_BLOCKS: tuple[tuple[str, str, tuple[str, ...]], ...] = (
    ("heavy-nonplanar", HEAVY_NONPLANAR, (
        'I`KxuJBpw',
        'J]oo?CJ@w^_',
        'IJaK[\\x\\_',
        'J]oo?SJ@wN_',
        'Js?GZ`oBw^?',
        'J?C^F?]FV@_',
        'JWC]E?]FPF_',
        'JWCXEC]FUD_',
        'J@KEMJCNHu?',
        'J`MAIIBNHu?',
        'J`MAIIBNPt?',
        'Ks?GOKH@b`mE',
        'K??WooEwV@[K',
        'Ko?WooEWR@ON',
        'K?Ku?CKKUBWM',
        'K]??WWKKME?]',
        'K]?M@_IA_J_m',
        'K]?M@_I@gQ_l',
        'JwCWFFaFo|?',
        'K]?GWB@KO^@y',
        'Lr??WYOBGEK@?N',
    )),
    ("disjoint-cuts", DISJOINT_CUTS, (
        'IwC^F?^Fo',
        'Jr?G[`_Bw^?',
        'Kr?GOMOAWLKB',
    )),
    ("multi-cuts-ge3", MULTI_CUTS_GE3, (
        'KwCW?CB~FFb~',
        'L]?GW?@?][ENB~',
        'LF?GW?@?^[[MB~',
        'M?ope???G@}?A^@n_',
        'M?B_oo??G@~??~wM_',
        'M??CZ_??G@~_bM[M_',
        'No@_??B?ooB?f??NkWW',
        'N?@_op__C?O?@N?vN?W',
        'N?KsA@?OC?O??~BbEMG',
        'NCO`@@?OC?O?ENDr@}?',
        'LJ?GW?@?^{]Mb{',
        'MBW?GK??G@{weM`}?',
        'N?B@`b????_B}?BN@Z_',
        'Oo@_??B?ooB???f?_FrEC',
    )),
    ("exactly-two-cuts", EXACTLY_TWO_CUTS, (
        'K`K?GN?N~pW|',
        'L]?GW?@?XbxqB}',
        'Ls?G?CBBBf`}^D',
        'M?ope???N_?FA\\@l_',
        'M??Wv???G@_v}AwN?',
        'LWCW?CBo@Fz`F{',
        'MEo`?K??G@{G@nE]?',
        'M?CV?W??G@`f{Pw]?',
        'N??@`_KBE?W??NBp]?O',
        'N??BB?[_C??Bw@FEbw_',
        'M?KuE???G@}??~B]?',
        'M??^?o??G@_n}@w]?',
        'N???@_oBe?W?{?Bb`{_',
        'LWCW?CBGEww]F{',
        'M?NE?O??G@}G@}K]?',
        'M??^?G??G@bN}Ow]?',
        'No???oE@_oO?F`WRKE_',
        'N??uE?GA?O?_{@?~EF_',
        'L?CW?CBwFw[[F{',
        'M?BE@o??G@~?MM@}?',
        'M??F?w??G@bf~?w]?',
        'N????oE@_o[?F`wQ[E?',
        'N??EE?C@?GF?}??~FF?',
    )),
    ("unique-cut-split", UNIQUE_CUT_SPLIT, (
        'JwC?G{]}^N?',
        'K]?G?FKKo^`}',
        'Ks?G?CNBrxm]',
        'KWC?GKwuENB}',
        'L?r@_?@?xbFao]',
        'L??^??@@Wr^Aw]',
        'K?CW?FbwvwB}',
        'L?BE??@}@rFK@z',
        'L??F??@FWz^_w]',
        'KoCW?DbWsxb}',
        'LEo`??@w?N_}EZ',
        'L?CV??@BWZ]Bw]',
        'LQQ@}???G@cnE]',
        'M]??OGCA?F`_KdoX?',
        'MF??OGCA?F`_wdwX?',
        'LQQBKo??G@cnEm',
        'M]??OGCA?K`KKdoY?',
        'MF??OGCA?K`KwdwY?',
        'LBa??CBFBWK]_}',
        'M]??GGGA@`_]p@Aq_',
        'M?w??KOC?B_uxa{B?',
        'LW???CBNEwB{o{',
        'M]?GO???@b_}A[p__',
        'MF??W????F`mw[zA?',
        'LSP??CBN@wO^O}',
        'M???WZ?K?F@a{B{B?',
        'MCaAA?_G?F_]VBNB?',
        'Lo???CB^BwB{_}',
        'M???@_oo?Bforara?',
        'MS`A????@r_}@{]@_',
        'L????CB~FwP{[w',
        'M]??????E[EMB{B{?',
        'Ms???????^`}]K\\o?',
    )),
    ("unique-cut-nosplit", UNIQUE_CUT_NOSPLIT, (
        'I@NEE?~No',
        'Jr??WWKczF?',
        'Js??WWK[zf?',
        'J@K?ENEnb{?',
        'K]????NBuUEw',
        'Ks????NBruMw',
        'J?CXFFav`~?',
        'K?r??CrKpyW]',
        'KF???CNBvY[]',
        'K??G[``{C|Lw',
        'L]????N?oWxaKq',
        'Ls????NAOKnH\\c',
        'K@?GXBPw?}xw',
        'L]???OF?O[eqqK',
        'LF???OF?O[{qyK',
        'K???GNw}C}Lw',
        'L]?????rHf@{Bw',
        'Ls?????Bw^NK\\g',
        'K@C?GNgy?nxw',
        'LBW?CA?@wNBswE',
        'L?`o?A?AwVM[{E',
        'MQQ@Go??G@wWH]Em?',
        'N]??OGCA?C_KBBKdWL?',
        'Ns??OGCA?C_KBB[dML?',
        'K`?G]?o{]^F{',
        'L]?G?CK?pxw]B{',
        'Ls?G?CK?o^ne[{',
        'MIa?X`L???_BKf_v?',
        'NBW?GI?_?@_W@LEq[@_',
        'N?w?GGOC?@_W@Lwq]@_',
        'LoD_?CBECwk]F{',
        'M?NE@_??G@`NLao]?',
        'M?CV?W??G@aNzAw]?',
        'MSP@x_K???_B_^O^?',
        'N]??OOC@?E?E?{MBW`_',
        'Ns??OOC@?E?E?{]BM`_',
        'LWC?GN?EEoc}F{',
        'M@JE?o??G@bFHqo]?',
        'M??^??@E?BBLxEw]?',
    )),
)

_SHA256 = "2cc6e0c0eac2ce6ba5b1cc1b26216264093d65f92cadcb9fbc24a1fd814bff70"

BLOCK_NAMES: tuple[str, ...] = tuple(name for name, _, _ in _BLOCKS)

BLOCK_SIZES: dict[str, int] = {name: len(words) for name, _, words in _BLOCKS}


@dataclass(frozen=True)
class CatalogEntry:
    """One catalog graph: its graph6 word, home block, expected class."""

    g6: str
    figure: str
    expected_class: str

    def graph(self) -> Graph:
        return decode_graph6(self.g6)


def _verify_embedded() -> None:
    joined = "\n".join(w for _, _, words in _BLOCKS for w in words)
    got = hashlib.sha256(joined.encode("ascii")).hexdigest()
    if got != _SHA256:
        raise RuntimeError(
            f"embedded catalog corrupted: checksum {got} != {_SHA256}"
        )


def load_catalog() -> list[CatalogEntry]:
    """All 133 entries in printed order, checksum-verified."""
    _verify_embedded()
    return [
        CatalogEntry(g6=w, figure=name, expected_class=label)
        for name, label, words in _BLOCKS
        for w in words
    ]


def block(name: str) -> list[CatalogEntry]:
    """Entries of one named block, printed order."""
    for bname, label, words in _BLOCKS:
        if bname == name:
            _verify_embedded()
            return [
                CatalogEntry(g6=w, figure=bname, expected_class=label)
                for w in words
            ]
    raise KeyError(f"unknown block {name!r}; known: {', '.join(BLOCK_NAMES)}")


def expected_census() -> dict[str, int]:
    """Class label -> how many of the 133 carry it."""
    return {label: len(words) for _, label, words in _BLOCKS}
