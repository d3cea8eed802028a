// Command-line front end: every computation and verification of the library,
// with machine-readable output. Exit codes: 0 success / verified true,
// 1 verified false, 2 usage error, 3 internal certificate failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "mirrorcalc/mirror.hpp"
#include "mirrorcalc/quiver.hpp"

using json = nlohmann::json;
using namespace mirrorcalc;

namespace {

int g_thread_cap = 1;

json graded_to_json(const exactlin::GradedSpace& g) {
    json j = json::object();
    for (auto& [d, n] : g.dims) j[std::to_string(d)] = n;
    return j;
}

json parity_table_to_json(const bmodels::ParityTable& t) {
    json j;
    j["even"] = t.dims[0];
    j["odd"] = t.dims[1];
    return j;
}

json coh_table_to_json(const bmodels::CohTable& t) {
    json j = json::object();
    for (auto& [k, row] : t.rows) j[std::to_string(k)] = row;
    return j;
}

json report_to_json(const mirror::MirrorReport& r) { return json::parse(r.to_json()); }

json header(const std::string& verb) {
    json j;
    j["schema"] = "mirrorcalc-1";
    j["verb"] = verb;
    const auto& f = exactlin::session_field();
    j["field"] = f.kind == exactlin::FieldKind::Rationals ? "q" : ("fp:" + std::to_string(f.p));
    j["thread_cap"] = g_thread_cap;
    return j;
}

void emit(const json& j, bool table_format) {
    if (table_format) {
        // a light fixed-width rendering of one level of the report
        for (auto& [k, v] : j.items()) std::cout << k << ": " << v.dump() << "\n";
    } else {
        std::cout << j.dump(2) << "\n";
    }
}

quivers::PerfComplex parse_object(const std::string& name, quivers::LinearQuiver q) {
    if (name.size() < 2) throw CLI::ValidationError("--object", "expected P<i>, I<i> or k<i>");
    int a = std::atoi(name.substr(1).c_str());
    switch (name[0]) {
        case 'P': return quivers::named_object(q, quivers::NamedKind::Projective, a);
        case 'I': return quivers::named_object(q, quivers::NamedKind::Injective, a);
        case 'k': return quivers::named_object(q, quivers::NamedKind::Skyscraper, a);
    }
    throw CLI::ValidationError("--object", "expected P<i>, I<i> or k<i>");
}

// Recognizes the punctured-sphere builder skeleta so that circle families can
// be requested by index from the command line.
std::optional<skeleton::SphereSkeleton> match_builder(const skeleton::RibbonSkeleton& s) {
    for (int n = 2; n <= 12; ++n) {
        skeleton::SphereSkeleton cand = skeleton::punctured_sphere_skeleton(n);
        if (skeleton::skeleton_to_text(cand.skel) == skeleton::skeleton_to_text(s)) return cand;
    }
    return std::nullopt;
}

skeleton::LimitObject parse_family(const std::string& spec, const skeleton::RibbonSkeleton& skel) {
    // family specs: "zero", or "circle:<index>[:<monodromy>]" when the file
    // is one of the punctured-sphere builder skeleta
    skeleton::LimitObject fam;
    if (spec == "zero") {
        attach_certificates(skel, fam);
        return fam;
    }
    if (spec.rfind("circle:", 0) == 0) {
        auto builder = match_builder(skel);
        if (!builder)
            throw CLI::ValidationError("--x/--y",
                                       "circle families need a punctured-sphere builder skeleton "
                                       "(generate one with `skeleton make`)");
        std::string rest = spec.substr(7);
        long idx = 0, num = 1, den = 1;
        auto colon = rest.find(':');
        if (colon == std::string::npos) {
            idx = std::atol(rest.c_str());
        } else {
            idx = std::atol(rest.substr(0, colon).c_str());
            std::string mono = rest.substr(colon + 1);
            auto slash = mono.find('/');
            num = std::atol(mono.substr(0, slash).c_str());
            if (slash != std::string::npos) den = std::atol(mono.substr(slash + 1).c_str());
        }
        return skeleton::circle_family(*builder, (int)idx, exactlin::Scalar(num, den));
    }
    throw CLI::ValidationError("--x/--y", "family spec must be zero or circle:<i>[:m]");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "mirrorcalc: exact generator-level computations for quiver models of surface skeleta,\n"
        "matrix factorizations and coherent generators on coordinate-hyperplane unions, and\n"
        "pair-of-pants skeleton combinatorics, with mirror comparisons between them."};
    app.require_subcommand(1);
    std::string field_spec = "q";
    app.add_option("--field", field_spec, "ground field: q (rationals) or fp:<prime>");
    std::string format = "json";
    app.add_option("--format", format, "output format: json or table")
        ->check(CLI::IsMember({"json", "table"}));

    if (const char* cap = std::getenv("MIRRORCALC_THREADS")) g_thread_cap = std::max(1, std::atoi(cap));

    // mf-hom
    auto* mf = app.add_subcommand("mf-hom",
                                  "cohomology table of the Hom complex between two rank-one "
                                  "factorizations of the product superpotential");
    int mf_n = 2, mf_a = 1, mf_b = -1, mf_deg = 6;
    mf->add_option("--n", mf_n, "dimension (the superpotential has n+1 factors)")->required();
    mf->add_option("--a", mf_a, "first index")->required();
    mf->add_option("--b", mf_b, "second index (defaults to --a)");
    mf->add_option("--deg", mf_deg, "total degree bound");

    // coh-ext
    auto* ce = app.add_subcommand("coh-ext",
                                  "Ext table between hyperplane structure sheaves on the "
                                  "coordinate-hyperplane union, from truncated 2-periodic resolutions");
    int ce_n = 2, ce_a = 1, ce_b = 1, ce_deg = 6, ce_udeg = 3;
    ce->add_option("--n", ce_n, "number of coordinates")->required();
    ce->add_option("--a", ce_a, "first index")->required();
    ce->add_option("--b", ce_b, "second index")->required();
    ce->add_option("--deg", ce_deg, "polynomial degree bound");
    ce->add_option("--udeg", ce_udeg, "tower degree bound");

    // fold-check
    auto* fc = app.add_subcommand("fold-check",
                                  "compare the folded hyperplane Ext tables with the factorization "
                                  "tables, tower variable against the extra coordinate");
    int fc_n = 2, fc_deg = 6;
    fc->add_option("--n", fc_n, "number of coordinates on the coherent side")->required();
    fc->add_option("--deg", fc_deg, "total degree bound");

    // mutate
    auto* mu = app.add_subcommand("mutate",
                                  "apply the cyclic mutation to a named generator and search for the "
                                  "shift certificate");
    int mu_cycle = 3, mu_times = 1;
    std::string mu_object = "k1";
    mu->add_option("--cycle", mu_cycle, "cycle size m (the quiver has m-1 vertices)")->required();
    mu->add_option("--object", mu_object, "named generator: P<i>, I<i> or k<i>")->required();
    mu->add_option("--times", mu_times, "number of rotations");

    // skeleton
    auto* sk = app.add_subcommand("skeleton", "operations on a skeleton file");
    std::string sk_file;
    sk->add_option("--file", sk_file, "skeleton file path")->required();
    auto* sk_hom = sk->add_subcommand("hom", "limit Hom table of two families over the diagram");
    std::string sk_x = "zero", sk_y = "zero";
    sk_hom->add_option("--x", sk_x, "first family spec");
    sk_hom->add_option("--y", sk_y, "second family spec");
    auto* sk_info = sk->add_subcommand("info", "node and relation counts of the induced diagram");
    auto* sk_make = sk->add_subcommand("make", "write a punctured-sphere builder skeleton to the file");
    int sk_punct = 3;
    sk_make->add_option("--punctures", sk_punct, "number of punctures");

    // strata
    auto* st = app.add_subcommand("strata",
                                  "strata of the pair-of-pants skeleton with the compactly supported "
                                  "Euler characteristic and the lattice cover degree");
    int st_n = 2;
    st->add_option("--n", st_n, "dimension")->required();

    // mirror
    auto* mi = app.add_subcommand("mirror", "diagram-level mirror comparisons");
    auto* mi_s = mi->add_subcommand("surface",
                                    "cover diagram of the punctured-sphere skeleton against the "
                                    "descent presentation of the mirror chain");
    int mi_punct = 3;
    mi_s->add_option("--punctures", mi_punct, "number of punctures (2..5)")->required();
    auto* mi_p = mi->add_subcommand("pants",
                                    "torus-model diagram over coordinate subsets against the "
                                    "coordinate-space cube, with the target fingerprint");
    int mi_dim = 1;
    mi_p->add_option("--dim", mi_dim, "pants dimension (1..3)")->required();
    int mi_poly = 6, mi_udeg = 3, mi_loop = 6;
    for (auto* sub : {mi_s, mi_p}) {
        sub->add_option("--poly-deg", mi_poly, "polynomial degree bound");
        sub->add_option("--udeg", mi_udeg, "tower degree bound");
        sub->add_option("--loop-len", mi_loop, "loop length bound");
    }
    std::string mi_tamper_edge, mi_tamper_gen;
    for (auto* sub : {mi_s, mi_p}) {
        sub->add_option("--tamper-edge", mi_tamper_edge, "sensitivity harness: edge name to perturb");
        sub->add_option("--tamper-generator", mi_tamper_gen, "sensitivity harness: generator to shift");
    }

    // duality
    auto* du = app.add_subcommand("duality",
                                  "hom-pairing duality check on the linear quiver: finite tables, "
                                  "dual-table symmetry, double duals, unimodular Euler pairing");
    int du_an = 3;
    du->add_option("--an", du_an, "number of vertices")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (field_spec == "q") {
            exactlin::set_session_field(exactlin::Field::rationals());
        } else if (field_spec.rfind("fp:", 0) == 0) {
            exactlin::set_session_field(exactlin::Field::prime(std::atol(field_spec.substr(3).c_str())));
        } else {
            std::cerr << "unknown field: " << field_spec << "\n";
            return 2;
        }
        const bool tabular = format == "table";

        if (*mf) {
            if (mf_b < 0) mf_b = mf_a;
            json j = header("mf-hom");
            j["n"] = mf_n;
            j["a"] = mf_a;
            j["b"] = mf_b;
            j["deg"] = mf_deg;
            j["table"] = parity_table_to_json(
                bmodels::mf_hom_cohomology(bmodels::mf_generator(mf_n, mf_a), bmodels::mf_generator(mf_n, mf_b), mf_deg));
            emit(j, tabular);
            return 0;
        }
        if (*ce) {
            json j = header("coh-ext");
            j["n"] = ce_n;
            j["a"] = ce_a;
            j["b"] = ce_b;
            j["deg"] = ce_deg;
            j["udeg"] = ce_udeg;
            j["table"] = coh_table_to_json(bmodels::coh_ext_table(ce_n, ce_a, ce_b, ce_deg, ce_udeg));
            j["oracle"] = coh_table_to_json(bmodels::coh_ext_oracle(ce_n, ce_a, ce_b, ce_deg, ce_udeg));
            emit(j, tabular);
            return 0;
        }
        if (*fc) {
            json j = header("fold-check");
            j["n"] = fc_n;
            j["deg"] = fc_deg;
            bool all = true;
            json per = json::object();
            for (int a = 1; a <= fc_n; ++a) {
                bool ok = bmodels::fold_compare(fc_n, a, fc_deg);
                for (int b = 1; b <= fc_n; ++b)
                    if (b != a) ok = ok && bmodels::fold_compare_pair(fc_n, a, b, fc_deg);
                per[std::to_string(a)] = ok;
                all = all && ok;
            }
            j["per_index"] = per;
            j["overall"] = all;
            emit(j, tabular);
            return all ? 0 : 1;
        }
        if (*mu) {
            if (mu_cycle < 2) {
                std::cerr << "cycle size must be at least 2\n";
                return 2;
            }
            quivers::LinearQuiver q(mu_cycle - 1);
            quivers::PerfComplex x = parse_object(mu_object, q);
            quivers::PerfComplex r = x;
            for (int i = 0; i < mu_times; ++i) r = quivers::cyclic_rotate(r);
            json j = header("mutate");
            j["cycle"] = mu_cycle;
            j["object"] = mu_object;
            j["times"] = mu_times;
            if (mu_times == mu_cycle) {
                bool folded = quivers::find_perf_quasi_iso(r, quivers::shift(x, 2), true).has_value();
                bool integral = quivers::find_perf_quasi_iso(r, quivers::shift(x, -2), false).has_value();
                j["result"] = "quasi-isomorphic to " + mu_object + "[2]";
                j["folded_certificate"] = folded;
                j["integer_certificate_for_minus2"] = integral;
                emit(j, tabular);
                return folded ? 0 : 1;
            }
            json dims = json::object();
            for (auto& [d, labels] : r.terms()) dims[std::to_string(d)] = labels.size();
            j["result_dims"] = dims;
            emit(j, tabular);
            return 0;
        }
        if (*sk && *sk_make) {
            std::ofstream out(sk_file);
            if (!out) {
                std::cerr << "cannot write " << sk_file << "\n";
                return 2;
            }
            out << skeleton::skeleton_to_text(skeleton::punctured_sphere_skeleton(sk_punct).skel);
            json j = header("skeleton-make");
            j["file"] = sk_file;
            j["punctures"] = sk_punct;
            emit(j, format == "table");
            return 0;
        }
        if (*sk) {
            std::ifstream in(sk_file);
            if (!in) {
                std::cerr << "cannot open " << sk_file << "\n";
                return 2;
            }
            std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
            skeleton::RibbonSkeleton s = skeleton::parse_skeleton(text);
            skeleton::CatDiagram d = skeleton::build_diagram(s, skeleton::DiagramMode::Sheaf);
            if (*sk_info || !*sk_hom) {
                json j = header("skeleton-info");
                j["file"] = sk_file;
                j["nodes"] = d.node_count();
                j["relations"] = d.relation_count();
                json sizes = json::object();
                for (auto& [elt, node] : d.nodes) {
                    std::string key = (elt.kind == skeleton::PosetElt::V   ? "vertex "
                                       : elt.kind == skeleton::PosetElt::E ? "edge "
                                                                           : "incidence ") +
                                      std::to_string(elt.idx);
                    sizes[key] = node.quiver().n;
                }
                j["node_sizes"] = sizes;
                emit(j, tabular);
                return 0;
            }
            skeleton::LimitObject x = parse_family(sk_x, s);
            skeleton::LimitObject y = parse_family(sk_y, s);
            json j = header("skeleton-hom");
            j["table"] = graded_to_json(skeleton::limit_hom(d, x, y));
            emit(j, tabular);
            return 0;
        }
        if (*st) {
            pantsgeom::StrataTable t = pantsgeom::strata(st_n);
            json j = header("strata");
            j["n"] = st_n;
            j["count"] = t.strata.size();
            json list = json::array();
            for (auto& s : t.strata) {
                json e;
                e["subset_mask"] = s.subset;
                e["torus_rank"] = s.torus_rank;
                e["simplex_dim"] = s.simplex_dim;
                list.push_back(e);
            }
            j["strata"] = list;
            j["euler_c"] = pantsgeom::euler_char_c(st_n);
            j["cover_degree"] = pantsgeom::contact_cover_degree(st_n);
            emit(j, tabular);
            return 0;
        }
        if (*mi_s || *mi_p) {
            mirror::Truncations tr{mi_poly, mi_udeg, mi_loop};
            std::optional<mirror::Perturbation> tam;
            if (!mi_tamper_edge.empty()) tam = mirror::Perturbation{mi_tamper_edge, mi_tamper_gen};
            mirror::MirrorReport rep = *mi_s ? mirror::verify_surface_mirror(mi_punct, tr, tam)
                                             : mirror::verify_pants_mirror(mi_dim, tr, tam);
            json j = header(*mi_s ? "mirror-surface" : "mirror-pants");
            j["report"] = report_to_json(rep);
            emit(j, tabular);
            return rep.overall ? 0 : 1;
        }
        if (*du) {
            bool ok = quivers::hom_pairing_duality_check(quivers::LinearQuiver(du_an));
            auto em = quivers::euler_matrix(quivers::LinearQuiver(du_an));
            json j = header("duality");
            j["an"] = du_an;
            j["ok"] = ok;
            j["euler_det"] = exactlin::det_integer(em).get_str();
            emit(j, tabular);
            return ok ? 0 : 1;
        }
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const skeleton::CertificateFailure& ex) {
        std::cerr << "certificate failure: " << ex.what() << "\n";
        return 3;
    } catch (const CLI::Error& ex) {
        std::cerr << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
}
