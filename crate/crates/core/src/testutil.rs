use crate::coxeter::Word;

/// All words of length `len` over `n` letters, in lex order.
pub(crate) fn all_words(n: u8, len: usize) -> Vec<Word> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w: Vec<u8>| {
                (0..n).map(move |s| {
                    let mut v = w.clone();
                    v.push(s);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(Word::from).collect()
}
