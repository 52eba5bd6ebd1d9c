//! Text and CSV renderers. Output is deterministic: section order is fixed
//! and every collection is emitted in its stored order.

use hharm_core::report::FullReport;

fn grid(rows: &[Vec<usize>]) -> String {
    let width = rows
        .iter()
        .flatten()
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
        out.push_str("  ");
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

pub fn text(r: &FullReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "structure {}  (n = {}, seed = {})\n",
        r.name, r.n, r.seed
    ));

    if let Some(t) = &r.box_table {
        out.push_str("\ndim Ker box  (columns p = 0..n, rows q = n..0)\n");
        out.push_str(&grid(t));
    }
    if let Some(t) = &r.hodge_table {
        out.push_str("\nhodge numbers h^{p,q}  (same layout)\n");
        out.push_str(&grid(t));
    }
    if let Some(b) = &r.betti {
        out.push_str(&format!(
            "\ninvariant betti numbers: {:?}  (poincare symmetric: {})\n",
            b.b, b.poincare_symmetric
        ));
    }

    if let Some(sec) = &r.identities {
        out.push_str(&format!("\nidentities ({}):\n", verdict(sec.passed)));
        for rep in &sec.reports {
            out.push_str(&format!(
                "  {:5} {}  [extra form: {}]\n",
                verdict(rep.holds),
                rep.display,
                rep.extra_form
            ));
            if let Some(w) = &rep.first_failure {
                out.push_str(&format!(
                    "        first failure at ({},{}) entry ({},{}): {} != {}\n",
                    w.p, w.q, w.row, w.col, w.lhs, w.rhs
                ));
            }
        }
        out.push_str(&format!(
            "  {:5} bochner-kodaira-nakano (pluri-closed: {})\n",
            verdict(sec.bkn.holds),
            sec.bkn.pluriclosed
        ));
    }

    if let Some(d) = &r.dualities {
        out.push_str(&format!("\ndualities ({}):\n", verdict(d.passed)));
        out.push_str(&format!(
            "  conjugation dims {} / kernel map {}\n",
            verdict(d.conj_dims_symmetric),
            verdict(d.conj_kernel_mapped)
        ));
        out.push_str(&format!(
            "  hodge star kernel map {} / serre dims {}\n",
            verdict(d.hodge_kernel_mapped),
            verdict(d.serre_dims_symmetric)
        ));
        for c in &d.star_adjoint {
            out.push_str(&format!(
                "  star-adjoint route for {}: {}\n",
                c.op,
                verdict(c.holds)
            ));
        }
    }

    if let Some(l) = &r.lefschetz {
        out.push_str(&format!(
            "\nlefschetz ({}): representation {}\n",
            verdict(l.passed),
            verdict(l.representation_ok)
        ));
        for m in &l.maps {
            out.push_str(&format!(
                "  L^{} : Ker({},{}) -> Ker({},{})  dims {} -> {}  rank {}  {}\n",
                m.power,
                m.source.0,
                m.source.1,
                m.target.0,
                m.target.1,
                m.source_dim,
                m.target_dim,
                m.rank,
                verdict(m.iso)
            ));
        }
    }

    if let Some(p) = &r.primitives {
        out.push_str(&format!("\nprimitive dims ({}):\n", verdict(p.passed)));
        out.push_str(&grid(&p.table.printed()));
        out.push_str(&format!(
            "  reconstruction {} / monotone diagonals {}\n",
            verdict(p.reconstruction_ok),
            verdict(p.monotonicity_ok)
        ));
    }

    if let Some(iq) = &r.inequalities {
        out.push_str(&format!("\ninequalities ({}):\n", verdict(iq.passed)));
        for row in &iq.degree_bounds {
            out.push_str(&format!(
                "  k = {}: kernel sum {} <= b^k = {}  {}\n",
                row.k,
                row.kernel_sum,
                row.betti,
                verdict(row.ok)
            ));
        }
        out.push_str(&format!(
            "  min(h^pq, h^qp) bound {} / vanishing {} / non-vanishing {}\n",
            verdict(iq.minmax_ok),
            verdict(iq.vanishing_ok),
            verdict(iq.nonvanishing_ok)
        ));
    }

    if let Some(l) = &r.lambda {
        out.push_str(&format!("\nlambda cohomology ({}):\n", verdict(l.passed)));
        out.push_str("  dim Ker Delta_lambda:\n");
        out.push_str(&grid(&l.lambda_table.printed()));
        out.push_str("  dim Ker Delta_lambdabar:\n");
        out.push_str(&grid(&l.lambdabar_table.printed()));
        out.push_str(&format!(
            "  fiberwise decomposition {} / serre {} / conjugation {} / inclusion {}\n",
            verdict(l.rank_identity_ok),
            verdict(l.serre_ok),
            verdict(l.conj_symmetry_ok),
            verdict(l.inclusion_ok)
        ));
    }

    if let Some(p) = &r.pluriclosed {
        out.push_str(&format!(
            "\npluri-closed ({}): del delbar omega {} zero; Ker box {} Ker(partial sum)\n",
            verdict(p.passed),
            if p.pluriclosed { "is" } else { "is not" },
            match p.kernels_equal {
                Some(true) => "equals",
                Some(false) => "DIFFERS FROM",
                None => "is contained in",
            }
        ));
    }

    if let Some(h) = &r.holomorphic {
        out.push_str(&format!("\nholomorphic forms ({}):\n", verdict(h.passed)));
        for e in &h.entries {
            out.push_str(&format!(
                "  p = {}: solution dim {}  in Ker box: {}\n",
                e.p,
                e.dim,
                verdict(e.in_box_kernel)
            ));
            for w in &e.witnesses {
                out.push_str(&format!("      {w}\n"));
            }
        }
    }

    if let Some(inj) = &r.injectivity {
        out.push_str(&format!("\ninjectivity ({}):\n", verdict(inj.passed)));
        if inj.injective.is_empty() {
            out.push_str("  no zero-order operator is injective on any bidegree\n");
        }
        for e in &inj.injective {
            out.push_str(&format!(
                "  {} injective on ({},{}) -> dim Ker box = {}\n",
                e.op, e.p, e.q, e.box_dim
            ));
        }
    }

    out.push_str(&format!("\noverall: {}\n", verdict(r.all_passed)));
    out
}

pub fn csv(r: &FullReport) -> String {
    let mut out = String::new();
    out.push_str("# meta\n");
    out.push_str(&format!("name,{}\n", r.name));
    out.push_str(&format!("n,{}\n", r.n));
    out.push_str(&format!("seed,{}\n", r.seed));

    let table = |out: &mut String, header: &str, rows: &[Vec<usize>]| {
        out.push_str(&format!("# {header}\n"));
        for row in rows {
            let cells: Vec<String> = row.iter().map(usize::to_string).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
    };

    if let Some(t) = &r.box_table {
        table(&mut out, "box_table", t);
    }
    if let Some(t) = &r.hodge_table {
        table(&mut out, "hodge_table", t);
    }
    if let Some(b) = &r.betti {
        out.push_str("# betti\n");
        let cells: Vec<String> = b.b.iter().map(usize::to_string).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
        out.push_str(&format!("poincare_symmetric,{}\n", b.poincare_symmetric));
    }
    if let Some(sec) = &r.identities {
        out.push_str("# identities\n");
        out.push_str("id,holds,extra_form\n");
        for rep in &sec.reports {
            out.push_str(&format!("{},{},{}\n", rep.id, rep.holds, rep.extra_form));
        }
        out.push_str(&format!(
            "bkn,{},pluriclosed={}\n",
            sec.bkn.holds, sec.bkn.pluriclosed
        ));
    }
    if let Some(d) = &r.dualities {
        out.push_str("# dualities\n");
        out.push_str(&format!("conj_dims,{}\n", d.conj_dims_symmetric));
        out.push_str(&format!("conj_kernel,{}\n", d.conj_kernel_mapped));
        out.push_str(&format!("hodge_kernel,{}\n", d.hodge_kernel_mapped));
        out.push_str(&format!("serre_dims,{}\n", d.serre_dims_symmetric));
        for c in &d.star_adjoint {
            out.push_str(&format!("star_adjoint_{},{}\n", c.op, c.holds));
        }
    }
    if let Some(l) = &r.lefschetz {
        out.push_str("# lefschetz\n");
        out.push_str("power,src_p,src_q,dst_p,dst_q,src_dim,dst_dim,rank,iso\n");
        for m in &l.maps {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{}\n",
                m.power,
                m.source.0,
                m.source.1,
                m.target.0,
                m.target.1,
                m.source_dim,
                m.target_dim,
                m.rank,
                m.iso
            ));
        }
    }
    if let Some(p) = &r.primitives {
        table(&mut out, "primitive_dims", &p.table.printed());
        out.push_str(&format!("reconstruction,{}\n", p.reconstruction_ok));
        out.push_str(&format!("monotonicity,{}\n", p.monotonicity_ok));
    }
    if let Some(iq) = &r.inequalities {
        out.push_str("# inequalities\n");
        out.push_str("k,kernel_sum,betti,ok\n");
        for row in &iq.degree_bounds {
            out.push_str(&format!(
                "{},{},{},{}\n",
                row.k, row.kernel_sum, row.betti, row.ok
            ));
        }
        out.push_str(&format!("minmax,{}\n", iq.minmax_ok));
        out.push_str(&format!("vanishing,{}\n", iq.vanishing_ok));
        out.push_str(&format!("nonvanishing,{}\n", iq.nonvanishing_ok));
    }
    if let Some(l) = &r.lambda {
        table(&mut out, "lambda_table", &l.lambda_table.printed());
        table(&mut out, "lambdabar_table", &l.lambdabar_table.printed());
        out.push_str(&format!("rank_identity,{}\n", l.rank_identity_ok));
        out.push_str(&format!("serre,{}\n", l.serre_ok));
        out.push_str(&format!("conjugation,{}\n", l.conj_symmetry_ok));
        out.push_str(&format!("inclusion,{}\n", l.inclusion_ok));
    }
    if let Some(p) = &r.pluriclosed {
        out.push_str("# pluriclosed\n");
        out.push_str(&format!("pluriclosed,{}\n", p.pluriclosed));
        out.push_str(&format!(
            "kernels_equal,{}\n",
            p.kernels_equal.map_or("n/a".to_string(), |b| b.to_string())
        ));
        out.push_str(&format!("containment,{}\n", p.containment_ok));
    }
    if let Some(h) = &r.holomorphic {
        out.push_str("# holomorphic\n");
        out.push_str("p,dim,in_box_kernel\n");
        for e in &h.entries {
            out.push_str(&format!("{},{},{}\n", e.p, e.dim, e.in_box_kernel));
        }
    }
    if let Some(inj) = &r.injectivity {
        out.push_str("# injectivity\n");
        out.push_str("op,p,q,box_dim\n");
        for e in &inj.injective {
            out.push_str(&format!("{},{},{},{}\n", e.op, e.p, e.q, e.box_dim));
        }
    }
    out.push_str(&format!("# overall\npassed,{}\n", r.all_passed));
    out
}
