//! The cubic graphs L_n: a chain of K_4-minus-an-edge pieces.

use wiener_core::{invalid, Graph, Result};

/// End piece on 5 vertices: K_4 - bd on {a,b,d,e} and c ~ b, d. Returns
/// the vertex c, whose third edge leads into the chain.
fn end_piece(g: &mut Graph) -> usize {
    let a = g.push_vertex(0);
    let b = g.push_vertex(1 << a);
    let d = g.push_vertex(1 << a);
    g.push_vertex(1 << a | 1 << b | 1 << d);
    g.push_vertex(1 << b | 1 << d)
}

/// Diamond K_4 minus the edge between its ends; returns the right end.
fn diamond(g: &mut Graph, prev: usize) -> usize {
    let x = g.push_vertex(1 << prev);
    let y1 = g.push_vertex(1 << x);
    let y2 = g.push_vertex(1 << x | 1 << y1);
    g.push_vertex(1 << y1 | 1 << y2)
}

/// Right end of L_{4k+4}: seven vertices n,o,p,r,s,t,u.
fn long_end(g: &mut Graph, prev: usize) {
    let n = g.push_vertex(1 << prev);
    let o = g.push_vertex(1 << n);
    let u = g.push_vertex(1 << n | 1 << o);
    let p = g.push_vertex(1 << o);
    let r = g.push_vertex(1 << p);
    let s = g.push_vertex(1 << p | 1 << r);
    g.push_vertex(1 << r | 1 << s | 1 << u);
}

/// L_n for even n >= 10: end piece, diamonds, and either a mirrored end
/// piece (n ≡ 2 mod 4) or the 7-vertex end (n ≡ 0 mod 4).
pub fn cubic_l(n: usize) -> Result<Graph> {
    if n % 2 == 1 || n < 10 || n > 64 || n == 8 {
        return Err(invalid(format!("L_n needs even n >= 10 (and n <= 64), got {n}")));
    }
    let (diamonds, short) = if n % 4 == 2 { ((n - 10) / 4, true) } else { ((n - 12) / 4, false) };
    let mut g = Graph::new(0);
    let mut tail = end_piece(&mut g);
    for _ in 0..diamonds {
        tail = diamond(&mut g, tail);
    }
    if short {
        let c = end_piece(&mut g);
        g.add_edge(tail, c);
    } else {
        long_end(&mut g, tail);
    }
    Ok(g)
}
