//! A small built-in stroke font for `--outline-text` mode: labels become
//! polyline paths instead of selectable text elements, so a diagram carries
//! no machine-readable strings. Glyphs live on a 5x7 grid (x 0..4, cap top
//! y=0, baseline y=6, descenders to y=8). Characters without a glyph render
//! as a placeholder box.

pub(super) type Strokes = &'static [&'static [(i8, i8)]];

pub(super) const PLACEHOLDER: Strokes = &[&[(0, 0), (4, 0), (4, 6), (0, 6), (0, 0)]];

pub(super) fn glyph(c: char) -> Option<Strokes> {
    let strokes: Strokes = match c {
        ' ' => &[],
        '0' | 'O' => &[&[
            (1, 0),
            (3, 0),
            (4, 1),
            (4, 5),
            (3, 6),
            (1, 6),
            (0, 5),
            (0, 1),
            (1, 0),
        ]],
        '1' => &[&[(1, 1), (2, 0), (2, 6)], &[(1, 6), (3, 6)]],
        '2' => &[&[(0, 1), (1, 0), (3, 0), (4, 1), (4, 2), (0, 6), (4, 6)]],
        '3' => &[&[
            (0, 0),
            (4, 0),
            (2, 2),
            (4, 4),
            (4, 5),
            (3, 6),
            (1, 6),
            (0, 5),
        ]],
        '4' => &[&[(3, 6), (3, 0), (0, 4), (4, 4)]],
        '5' => &[&[
            (4, 0),
            (0, 0),
            (0, 3),
            (3, 3),
            (4, 4),
            (4, 5),
            (3, 6),
            (1, 6),
            (0, 5),
        ]],
        '6' => &[&[
            (3, 0),
            (1, 0),
            (0, 1),
            (0, 5),
            (1, 6),
            (3, 6),
            (4, 5),
            (4, 4),
            (3, 3),
            (0, 3),
        ]],
        '7' => &[&[(0, 0), (4, 0), (1, 6)]],
        '8' => &[
            &[
                (1, 0),
                (3, 0),
                (4, 1),
                (4, 2),
                (3, 3),
                (1, 3),
                (0, 4),
                (0, 5),
                (1, 6),
                (3, 6),
                (4, 5),
                (4, 4),
                (3, 3),
            ],
            &[(1, 3), (0, 2), (0, 1), (1, 0)],
        ],
        '9' => &[&[
            (1, 6),
            (3, 6),
            (4, 5),
            (4, 1),
            (3, 0),
            (1, 0),
            (0, 1),
            (0, 2),
            (1, 3),
            (4, 3),
        ]],
        'A' => &[&[(0, 6), (2, 0), (4, 6)], &[(1, 4), (3, 4)]],
        'B' => &[&[
            (0, 3),
            (0, 0),
            (3, 0),
            (4, 1),
            (4, 2),
            (3, 3),
            (0, 3),
            (0, 6),
            (3, 6),
            (4, 5),
            (4, 4),
            (3, 3),
        ]],
        'C' => &[&[
            (4, 1),
            (3, 0),
            (1, 0),
            (0, 1),
            (0, 5),
            (1, 6),
            (3, 6),
            (4, 5),
        ]],
        'D' => &[&[(0, 0), (0, 6), (2, 6), (4, 4), (4, 2), (2, 0), (0, 0)]],
        'E' => &[&[(4, 0), (0, 0), (0, 6), (4, 6)], &[(0, 3), (3, 3)]],
        'F' => &[&[(4, 0), (0, 0), (0, 6)], &[(0, 3), (3, 3)]],
        'G' => &[&[
            (4, 1),
            (3, 0),
            (1, 0),
            (0, 1),
            (0, 5),
            (1, 6),
            (3, 6),
            (4, 5),
            (4, 3),
            (2, 3),
        ]],
        'H' => &[&[(0, 0), (0, 6)], &[(4, 0), (4, 6)], &[(0, 3), (4, 3)]],
        'I' => &[&[(1, 0), (3, 0)], &[(2, 0), (2, 6)], &[(1, 6), (3, 6)]],
        'J' => &[&[(4, 0), (4, 5), (3, 6), (1, 6), (0, 5)]],
        'K' => &[&[(0, 0), (0, 6)], &[(4, 0), (0, 3), (4, 6)]],
        'L' => &[&[(0, 0), (0, 6), (4, 6)]],
        'M' => &[&[(0, 6), (0, 0), (2, 3), (4, 0), (4, 6)]],
        'N' => &[&[(0, 6), (0, 0), (4, 6), (4, 0)]],
        'P' => &[&[(0, 6), (0, 0), (3, 0), (4, 1), (4, 2), (3, 3), (0, 3)]],
        'Q' => &[
            &[
                (1, 0),
                (3, 0),
                (4, 1),
                (4, 5),
                (3, 6),
                (1, 6),
                (0, 5),
                (0, 1),
                (1, 0),
            ],
            &[(2, 4), (4, 6)],
        ],
        'R' => &[
            &[(0, 6), (0, 0), (3, 0), (4, 1), (4, 2), (3, 3), (0, 3)],
            &[(2, 3), (4, 6)],
        ],
        'S' => &[&[
            (4, 1),
            (3, 0),
            (1, 0),
            (0, 1),
            (0, 2),
            (4, 4),
            (4, 5),
            (3, 6),
            (1, 6),
            (0, 5),
        ]],
        'T' => &[&[(0, 0), (4, 0)], &[(2, 0), (2, 6)]],
        'U' => &[&[(0, 0), (0, 5), (1, 6), (3, 6), (4, 5), (4, 0)]],
        'V' => &[&[(0, 0), (2, 6), (4, 0)]],
        'W' => &[&[(0, 0), (1, 6), (2, 3), (3, 6), (4, 0)]],
        'X' => &[&[(0, 0), (4, 6)], &[(4, 0), (0, 6)]],
        'Y' => &[&[(0, 0), (2, 3), (4, 0)], &[(2, 3), (2, 6)]],
        'Z' => &[&[(0, 0), (4, 0), (0, 6), (4, 6)]],
        'a' => &[
            &[(4, 2), (4, 6)],
            &[
                (4, 3),
                (3, 2),
                (1, 2),
                (0, 3),
                (0, 5),
                (1, 6),
                (3, 6),
                (4, 5),
            ],
        ],
        'b' => &[
            &[(0, 0), (0, 6)],
            &[
                (0, 3),
                (1, 2),
                (3, 2),
                (4, 3),
                (4, 5),
                (3, 6),
                (1, 6),
                (0, 5),
            ],
        ],
        'c' => &[&[
            (4, 3),
            (3, 2),
            (1, 2),
            (0, 3),
            (0, 5),
            (1, 6),
            (3, 6),
            (4, 5),
        ]],
        'd' => &[
            &[(4, 0), (4, 6)],
            &[
                (4, 3),
                (3, 2),
                (1, 2),
                (0, 3),
                (0, 5),
                (1, 6),
                (3, 6),
                (4, 5),
            ],
        ],
        'e' => &[&[
            (0, 4),
            (4, 4),
            (4, 3),
            (3, 2),
            (1, 2),
            (0, 3),
            (0, 5),
            (1, 6),
            (3, 6),
            (4, 5),
        ]],
        'f' => &[&[(3, 0), (2, 0), (1, 1), (1, 6)], &[(0, 3), (3, 3)]],
        'g' => &[
            &[(4, 2), (4, 7), (3, 8), (1, 8), (0, 7)],
            &[
                (4, 3),
                (3, 2),
                (1, 2),
                (0, 3),
                (0, 5),
                (1, 6),
                (3, 6),
                (4, 5),
            ],
        ],
        'h' => &[&[(0, 0), (0, 6)], &[(0, 3), (1, 2), (3, 2), (4, 3), (4, 6)]],
        'i' => &[&[(2, 0), (2, 1)], &[(2, 2), (2, 6)]],
        'j' => &[&[(3, 0), (3, 1)], &[(3, 2), (3, 7), (2, 8), (1, 8), (0, 7)]],
        'k' => &[&[(0, 0), (0, 6)], &[(3, 2), (0, 4), (4, 6)]],
        'l' => &[&[(2, 0), (2, 5), (3, 6)]],
        'm' => &[
            &[(0, 6), (0, 2)],
            &[(0, 3), (1, 2), (2, 3), (2, 6)],
            &[(2, 3), (3, 2), (4, 3), (4, 6)],
        ],
        'n' => &[&[(0, 6), (0, 2)], &[(0, 3), (1, 2), (3, 2), (4, 3), (4, 6)]],
        'o' => &[&[
            (1, 2),
            (3, 2),
            (4, 3),
            (4, 5),
            (3, 6),
            (1, 6),
            (0, 5),
            (0, 3),
            (1, 2),
        ]],
        'p' => &[
            &[(0, 2), (0, 8)],
            &[
                (0, 3),
                (1, 2),
                (3, 2),
                (4, 3),
                (4, 5),
                (3, 6),
                (1, 6),
                (0, 5),
            ],
        ],
        'q' => &[
            &[(4, 2), (4, 8)],
            &[
                (4, 3),
                (3, 2),
                (1, 2),
                (0, 3),
                (0, 5),
                (1, 6),
                (3, 6),
                (4, 5),
            ],
        ],
        'r' => &[&[(0, 2), (0, 6)], &[(0, 3), (1, 2), (3, 2), (4, 3)]],
        's' => &[&[
            (4, 3),
            (3, 2),
            (1, 2),
            (0, 3),
            (1, 4),
            (3, 4),
            (4, 5),
            (3, 6),
            (1, 6),
            (0, 5),
        ]],
        't' => &[&[(2, 0), (2, 5), (3, 6)], &[(1, 2), (3, 2)]],
        'u' => &[&[(0, 2), (0, 5), (1, 6), (3, 6), (4, 5)], &[(4, 2), (4, 6)]],
        'v' => &[&[(0, 2), (2, 6), (4, 2)]],
        'w' => &[&[(0, 2), (1, 6), (2, 4), (3, 6), (4, 2)]],
        'x' => &[&[(0, 2), (4, 6)], &[(4, 2), (0, 6)]],
        'y' => &[&[(0, 2), (2, 6)], &[(4, 2), (1, 8)]],
        'z' => &[&[(0, 2), (4, 2), (0, 6), (4, 6)]],
        '.' => &[&[(2, 5), (2, 6)]],
        ',' => &[&[(2, 5), (2, 6), (1, 7)]],
        ':' => &[&[(2, 2), (2, 3)], &[(2, 5), (2, 6)]],
        ';' => &[&[(2, 2), (2, 3)], &[(2, 5), (2, 6), (1, 7)]],
        '"' => &[&[(1, 0), (1, 2)], &[(3, 0), (3, 2)]],
        '\'' => &[&[(2, 0), (2, 2)]],
        '(' => &[&[(3, 0), (2, 2), (2, 4), (3, 6)]],
        ')' => &[&[(1, 0), (2, 2), (2, 4), (1, 6)]],
        '[' => &[&[(3, 0), (2, 0), (2, 6), (3, 6)]],
        ']' => &[&[(1, 0), (2, 0), (2, 6), (1, 6)]],
        '{' => &[&[(3, 0), (2, 1), (2, 2), (1, 3), (2, 4), (2, 5), (3, 6)]],
        '}' => &[&[(1, 0), (2, 1), (2, 2), (3, 3), (2, 4), (2, 5), (1, 6)]],
        '*' => &[&[(2, 1), (2, 5)], &[(0, 2), (4, 4)], &[(4, 2), (0, 4)]],
        '+' => &[&[(2, 1), (2, 5)], &[(0, 3), (4, 3)]],
        '-' => &[&[(0, 3), (4, 3)]],
        '_' => &[&[(0, 6), (4, 6)]],
        '/' => &[&[(4, 0), (0, 6)]],
        '\\' => &[&[(0, 0), (4, 6)]],
        '=' => &[&[(0, 2), (4, 2)], &[(0, 4), (4, 4)]],
        '<' => &[&[(4, 0), (0, 3), (4, 6)]],
        '>' => &[&[(0, 0), (4, 3), (0, 6)]],
        '?' => &[
            &[(0, 1), (1, 0), (3, 0), (4, 1), (4, 2), (2, 3), (2, 4)],
            &[(2, 5), (2, 6)],
        ],
        '!' => &[&[(2, 0), (2, 4)], &[(2, 5), (2, 6)]],
        '@' => &[&[
            (3, 4),
            (3, 2),
            (1, 2),
            (1, 4),
            (3, 4),
            (4, 3),
            (4, 1),
            (3, 0),
            (1, 0),
            (0, 1),
            (0, 5),
            (1, 6),
            (3, 6),
        ]],
        '#' => &[
            &[(1, 0), (1, 6)],
            &[(3, 0), (3, 6)],
            &[(0, 2), (4, 2)],
            &[(0, 4), (4, 4)],
        ],
        '&' => &[&[
            (4, 6),
            (0, 2),
            (0, 1),
            (1, 0),
            (2, 0),
            (3, 1),
            (0, 4),
            (0, 5),
            (1, 6),
            (2, 6),
            (4, 3),
        ]],
        '%' => &[&[(4, 0), (0, 6)], &[(1, 0), (1, 1)], &[(3, 5), (3, 6)]],
        '|' => &[&[(2, 0), (2, 6)]],
        '~' => &[&[(0, 3), (1, 2), (3, 4), (4, 3)]],
        _ => return None,
    };
    Some(strokes)
}
