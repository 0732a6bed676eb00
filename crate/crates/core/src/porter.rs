//! Porter suffix-stripping stemmer (the original 1980 rule set, all steps).
//!
//! Within each step the longest matching suffix wins; its condition is then
//! tested, and on failure no shorter suffix of the same step is tried.

/// Stems a lowercase word. Words shorter than three letters, or containing
/// anything other than ASCII letters, are returned unchanged.
pub fn stem(word: &str) -> String {
    if word.len() <= 2 || !word.bytes().all(|b| b.is_ascii_lowercase()) {
        return word.to_string();
    }
    let mut s = Stemmer {
        b: word.as_bytes().to_vec(),
        j: 0,
    };
    s.step1ab();
    s.step1c();
    s.step2();
    s.step3();
    s.step4();
    s.step5();
    String::from_utf8(s.b).expect("ascii input")
}

struct Stemmer {
    b: Vec<u8>,
    // offset of the stem end after a successful `ends` match
    j: usize,
}

impl Stemmer {
    fn k(&self) -> usize {
        self.b.len() - 1
    }

    fn cons(&self, i: usize) -> bool {
        match self.b[i] {
            b'a' | b'e' | b'i' | b'o' | b'u' => false,
            b'y' => i == 0 || !self.cons(i - 1),
            _ => true,
        }
    }

    /// Number of vowel-consonant sequences in b[0..j].
    fn m(&self) -> usize {
        let mut n = 0;
        let mut i = 0;
        loop {
            if i >= self.j {
                return n;
            }
            if !self.cons(i) {
                break;
            }
            i += 1;
        }
        i += 1;
        loop {
            loop {
                if i >= self.j {
                    return n;
                }
                if self.cons(i) {
                    break;
                }
                i += 1;
            }
            i += 1;
            n += 1;
            loop {
                if i >= self.j {
                    return n;
                }
                if !self.cons(i) {
                    break;
                }
                i += 1;
            }
            i += 1;
        }
    }

    fn vowel_in_stem(&self) -> bool {
        (0..self.j).any(|i| !self.cons(i))
    }

    fn double_cons(&self, i: usize) -> bool {
        i >= 1 && self.b[i] == self.b[i - 1] && self.cons(i)
    }

    /// cons-vowel-cons ending at i, where the final consonant is not w, x or y.
    fn cvc(&self, i: usize) -> bool {
        i >= 2
            && self.cons(i)
            && !self.cons(i - 1)
            && self.cons(i - 2)
            && !matches!(self.b[i], b'w' | b'x' | b'y')
    }

    fn ends(&mut self, suffix: &str) -> bool {
        let s = suffix.as_bytes();
        if s.len() > self.b.len() || !self.b.ends_with(s) {
            return false;
        }
        self.j = self.b.len() - s.len();
        true
    }

    fn set_to(&mut self, suffix: &str) {
        self.b.truncate(self.j);
        self.b.extend_from_slice(suffix.as_bytes());
    }

    fn replace_if_m(&mut self, suffix: &str) {
        if self.m() > 0 {
            self.set_to(suffix);
        }
    }

    fn step1ab(&mut self) {
        if self.b[self.k()] == b's' {
            if self.ends("sses") {
                self.b.truncate(self.b.len() - 2);
            } else if self.ends("ies") {
                self.set_to("i");
            } else if self.b[self.k() - 1] != b's' {
                self.b.pop();
            }
        }
        if self.ends("eed") {
            if self.m() > 0 {
                self.b.pop();
            }
        } else if (self.ends("ed") || self.ends("ing")) && self.vowel_in_stem() {
            self.b.truncate(self.j);
            if self.ends("at") {
                self.set_to("ate");
            } else if self.ends("bl") {
                self.set_to("ble");
            } else if self.ends("iz") {
                self.set_to("ize");
            } else if self.double_cons(self.k()) {
                if !matches!(self.b[self.k()], b'l' | b's' | b'z') {
                    self.b.pop();
                }
            } else {
                self.j = self.b.len();
                if self.m() == 1 && self.cvc(self.k()) {
                    self.b.push(b'e');
                }
            }
        }
    }

    fn step1c(&mut self) {
        if self.ends("y") && self.vowel_in_stem() {
            let k = self.k();
            self.b[k] = b'i';
        }
    }

    fn step2(&mut self) {
        if self.b.len() < 2 {
            return;
        }
        // keyed on the penultimate letter, longest suffix first
        match self.b[self.k() - 1] {
            b'a' => {
                if self.ends("ational") {
                    self.replace_if_m("ate");
                } else if self.ends("tional") {
                    self.replace_if_m("tion");
                }
            }
            b'c' => {
                if self.ends("enci") {
                    self.replace_if_m("ence");
                } else if self.ends("anci") {
                    self.replace_if_m("ance");
                }
            }
            b'e' => {
                if self.ends("izer") {
                    self.replace_if_m("ize");
                }
            }
            b'l' => {
                if self.ends("abli") {
                    self.replace_if_m("able");
                } else if self.ends("alli") {
                    self.replace_if_m("al");
                } else if self.ends("entli") {
                    self.replace_if_m("ent");
                } else if self.ends("eli") {
                    self.replace_if_m("e");
                } else if self.ends("ousli") {
                    self.replace_if_m("ous");
                }
            }
            b'o' => {
                if self.ends("ization") {
                    self.replace_if_m("ize");
                } else if self.ends("ation") {
                    self.replace_if_m("ate");
                } else if self.ends("ator") {
                    self.replace_if_m("ate");
                }
            }
            b's' => {
                if self.ends("alism") {
                    self.replace_if_m("al");
                } else if self.ends("iveness") {
                    self.replace_if_m("ive");
                } else if self.ends("fulness") {
                    self.replace_if_m("ful");
                } else if self.ends("ousness") {
                    self.replace_if_m("ous");
                }
            }
            b't' => {
                if self.ends("aliti") {
                    self.replace_if_m("al");
                } else if self.ends("iviti") {
                    self.replace_if_m("ive");
                } else if self.ends("biliti") {
                    self.replace_if_m("ble");
                }
            }
            _ => {}
        }
    }

    fn step3(&mut self) {
        match self.b[self.k()] {
            b'e' => {
                if self.ends("icate") {
                    self.replace_if_m("ic");
                } else if self.ends("ative") {
                    self.replace_if_m("");
                } else if self.ends("alize") {
                    self.replace_if_m("al");
                }
            }
            b'i' => {
                if self.ends("iciti") {
                    self.replace_if_m("ic");
                }
            }
            b'l' => {
                if self.ends("ical") {
                    self.replace_if_m("ic");
                } else if self.ends("ful") {
                    self.replace_if_m("");
                }
            }
            b's' => {
                if self.ends("ness") {
                    self.replace_if_m("");
                }
            }
            _ => {}
        }
    }

    fn step4(&mut self) {
        if self.b.len() < 2 {
            return;
        }
        let matched = match self.b[self.k() - 1] {
            b'a' => self.ends("al"),
            b'c' => self.ends("ance") || self.ends("ence"),
            b'e' => self.ends("er"),
            b'i' => self.ends("ic"),
            b'l' => self.ends("able") || self.ends("ible"),
            b'n' => self.ends("ant") || self.ends("ement") || self.ends("ment") || self.ends("ent"),
            b'o' => {
                (self.ends("ion") && self.j > 0 && matches!(self.b[self.j - 1], b's' | b't'))
                    || self.ends("ou")
            }
            b's' => self.ends("ism"),
            b't' => self.ends("ate") || self.ends("iti"),
            b'u' => self.ends("ous"),
            b'v' => self.ends("ive"),
            b'z' => self.ends("ize"),
            _ => false,
        };
        if matched && self.m() > 1 {
            self.b.truncate(self.j);
        }
    }

    fn step5(&mut self) {
        // step 5a
        self.j = self.b.len();
        if self.b[self.k()] == b'e' {
            self.j = self.b.len() - 1;
            let a = self.m();
            if a > 1 || (a == 1 && !self.cvc(self.k() - 1)) {
                self.b.pop();
            }
        }
        // step 5b
        self.j = self.b.len();
        if self.b[self.k()] == b'l' && self.double_cons(self.k()) && self.m() > 1 {
            self.b.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::stem;

    #[test]
    fn canonical_samples() {
        for (word, expected) in [
            ("caresses", "caress"),
            ("ponies", "poni"),
            ("ties", "ti"),
            ("caress", "caress"),
            ("cats", "cat"),
            ("feed", "feed"),
            ("agreed", "agre"),
            ("plastered", "plaster"),
            ("bled", "bled"),
            ("motoring", "motor"),
            ("sing", "sing"),
            ("conflated", "conflat"),
            ("troubled", "troubl"),
            ("sized", "size"),
            ("hopping", "hop"),
            ("tanned", "tan"),
            ("falling", "fall"),
            ("hissing", "hiss"),
            ("fizzed", "fizz"),
            ("failing", "fail"),
            ("filing", "file"),
            ("happy", "happi"),
            ("sky", "sky"),
            ("relational", "relat"),
            ("conditional", "condit"),
            ("rational", "ration"),
            ("valenci", "valenc"),
            ("hesitanci", "hesit"),
            ("digitizer", "digit"),
            ("conformabli", "conform"),
            ("radicalli", "radic"),
            ("differentli", "differ"),
            ("vileli", "vile"),
            ("analogousli", "analog"),
            ("vietnamization", "vietnam"),
            ("predication", "predic"),
            ("operator", "oper"),
            ("feudalism", "feudal"),
            ("decisiveness", "decis"),
            ("hopefulness", "hope"),
            ("callousness", "callous"),
            ("formaliti", "formal"),
            ("sensitiviti", "sensit"),
            ("sensibiliti", "sensibl"),
            ("triplicate", "triplic"),
            ("formative", "form"),
            ("formalize", "formal"),
            ("electriciti", "electr"),
            ("electrical", "electr"),
            ("hopeful", "hope"),
            ("goodness", "good"),
            ("revival", "reviv"),
            ("allowance", "allow"),
            ("inference", "infer"),
            ("airliner", "airlin"),
            ("gyroscopic", "gyroscop"),
            ("adjustable", "adjust"),
            ("defensible", "defens"),
            ("irritant", "irrit"),
            ("replacement", "replac"),
            ("adjustment", "adjust"),
            ("dependent", "depend"),
            ("adoption", "adopt"),
            ("homologou", "homolog"),
            ("communism", "commun"),
            ("activate", "activ"),
            ("angulariti", "angular"),
            ("homologous", "homolog"),
            ("effective", "effect"),
            ("bowdlerize", "bowdler"),
            ("probate", "probat"),
            ("rate", "rate"),
            ("cease", "ceas"),
            ("controll", "control"),
            ("roll", "roll"),
        ] {
            assert_eq!(stem(word), expected, "stem({word})");
        }
    }

    #[test]
    fn short_and_nonascii_words_pass_through() {
        assert_eq!(stem("as"), "as");
        assert_eq!(stem("o"), "o");
        assert_eq!(stem("oop"), "oop");
        assert_eq!(stem("don't"), "don't");
        assert_eq!(stem("café"), "café");
    }
}
