//! The named example grammars, in the same text format [`parse_grammar`]
//! accepts. The CLI ships these as files; the library embeds the same
//! text so the reference checks run anywhere.

use crate::grammar::{parse_grammar, parse_sequential_grammar, LGrammar, SequentialGrammar};

/// Minimal Fibonacci grammar: counts of each symbol follow the Fibonacci
/// recurrence.
pub const FIB: &str = "\
# Fibonacci grammar
axiom: 0
0 -> 1
1 -> 0 1
";

/// The Thue-Morse (XOR) grammar.
pub const XOR: &str = "\
# Thue-Morse grammar
axiom: 0
0 -> 0 1
1 -> 1 0
";

/// The mirror-image variant of the Thue-Morse grammar.
pub const XOR_DAGGER: &str = "\
# Thue-Morse variant with reversed bodies
axiom: 0
0 -> 1 0
1 -> 0 1
";

/// Fibonacci grammar with an erasing symbol in the weak body only.
pub const EFIB1: &str = "\
# Fibonacci grammar with an erasing symbol in one body
axiom: 0
0 -> 1 e
1 -> 0 1
e -> ~
";

/// Fibonacci grammar with an erasing symbol in both bodies.
pub const EFIB2: &str = "\
# Fibonacci grammar with an erasing symbol in both bodies
axiom: 0
0 -> 1 e
1 -> 0 1 e
e -> ~
";

/// A strong asymmetric grammar: the larger body contains the smaller.
pub const G_I: &str = "\
# Strong asymmetric example: 101 properly contains 10
axiom: 0
0 -> 1 0
1 -> 1 0 1
";

/// Strong asymmetric grammar over letters, remainder `b a b`.
pub const EQ9: &str = "\
# Strong asymmetric example over a two-letter alphabet
axiom: a
a -> a b
b -> a b b a b
";

/// Tampering with a non-constituent remainder: loses legality.
pub const EQ11: &str = "\
# The remainder 010 is not a constituent; 00 appears by generation 3
axiom: 0
0 -> 0 1
1 -> 0 1 0 1 0
";

/// Non-skip expansion: bodies are consecutive generations 3 and 4.
pub const EQ12A: &str = "\
# Non-skip expansion (bodies are generations 3 and 4)
axiom: 0
0 -> 1 0 1
1 -> 0 1 1 0 1
";

/// Skip expansion: bodies are generations 3 and 5.
pub const EQ12B: &str = "\
# Skip expansion (bodies are generations 3 and 5)
axiom: 0
0 -> 1 0 1
1 -> 1 0 1 0 1 1 0 1
";

/// Padded grammar that prunes back to minimal Fibonacci.
pub const EQ13: &str = "\
# Each body is a minimal body padded with the constituent 101
axiom: 0
0 -> 1 1 0 1
1 -> 1 0 1 0 1
";

/// Bodies built from two concatenated generations each.
pub const EQ14: &str = "\
# Bodies concatenate generations 4+3 and 5+4
axiom: 0
0 -> 0 1 1 0 1 1 0 1
1 -> 1 0 1 0 1 1 0 1 0 1 1 0 1
";

/// Quantitative-equivalence pair, smaller member.
pub const EQ19: &str = "\
# Quantitatively equivalent to its doubled variant
axiom: 0
0 -> 0 1
1 -> 1 0 1
";

/// Quantitative-equivalence pair, doubled member.
pub const EQ20: &str = "\
# Doubled bodies: same 0:1 ratio at every generation
axiom: 0
0 -> 0 1 0 1
1 -> 1 0 1 1 0 1
";

/// The conclusion-format grammar whose strings are mapped Fibonacci
/// generations.
pub const FIB_MAPPABLE: &str = "\
# Generations are mirror/negative images of Fibonacci generations
axiom: 0
0 -> 0 1
1 -> 0
";

/// The classic sequential demonstration grammar. Sequential-only: `N` has
/// two alternatives, consumed in order.
pub const CHOMSKY_2: &str = "\
# Sequential normal-grammar contrast
axiom: Sentence
Sentence -> NP VP
NP -> T N
VP -> Verb NP
T -> the
N -> man | ball
Verb -> hit
";

/// Name/text pairs for everything above, as shipped by the CLI.
pub const ALL: &[(&str, &str)] = &[
    ("fib", FIB),
    ("xor", XOR),
    ("xor-dagger", XOR_DAGGER),
    ("efib1", EFIB1),
    ("efib2", EFIB2),
    ("g-i", G_I),
    ("eq9", EQ9),
    ("eq11", EQ11),
    ("eq12a", EQ12A),
    ("eq12b", EQ12B),
    ("eq13", EQ13),
    ("eq14", EQ14),
    ("eq19", EQ19),
    ("eq20", EQ20),
    ("fib-mappable", FIB_MAPPABLE),
    ("chomsky-2", CHOMSKY_2),
];

fn must_parse(text: &str) -> LGrammar {
    parse_grammar(text).expect("catalog grammars parse")
}

pub fn fib() -> LGrammar {
    must_parse(FIB)
}
pub fn xor() -> LGrammar {
    must_parse(XOR)
}
pub fn xor_dagger() -> LGrammar {
    must_parse(XOR_DAGGER)
}
pub fn efib1() -> LGrammar {
    must_parse(EFIB1)
}
pub fn efib2() -> LGrammar {
    must_parse(EFIB2)
}
pub fn g_i() -> LGrammar {
    must_parse(G_I)
}
pub fn eq9() -> LGrammar {
    must_parse(EQ9)
}
pub fn eq11() -> LGrammar {
    must_parse(EQ11)
}
pub fn eq12a() -> LGrammar {
    must_parse(EQ12A)
}
pub fn eq12b() -> LGrammar {
    must_parse(EQ12B)
}
pub fn eq13() -> LGrammar {
    must_parse(EQ13)
}
pub fn eq14() -> LGrammar {
    must_parse(EQ14)
}
pub fn eq19() -> LGrammar {
    must_parse(EQ19)
}
pub fn eq20() -> LGrammar {
    must_parse(EQ20)
}
pub fn fib_mappable() -> LGrammar {
    must_parse(FIB_MAPPABLE)
}
pub fn chomsky_2() -> SequentialGrammar {
    parse_sequential_grammar(CHOMSKY_2).expect("catalog grammars parse")
}
