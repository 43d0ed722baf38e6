// mes — exact word-algebra, operator, and mould calculus on the command line.
//
// Exit codes: 0 success, 1 a verification run found a counterexample
// (machine-readable JSON on stderr), 2 usage or domain error.
//
// All output is deterministic: results live in canonically ordered maps, so
// bytes do not depend on thread count or run order.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <mes/mes.hpp>

namespace {

using namespace mes;

struct Options {
    int threads = default_threads();
    std::string output = "plain";  // plain | json | tsv | csv
    std::string arith = "exact";   // exact | modular
    size_t primes = 3;
};

bool want_json(const Options& g) { return g.output == "json"; }

// ---- small rendering helpers ----------------------------------------------

std::string xy_of(const ZWord& w) { return w.empty() ? std::string("e") : encode_xy(w).s; }

std::string echo_zword(const ZWord& w) { return format_zword(w) + " = " + xy_of(w); }

void echo_inputs_plain(const std::vector<ZWord>& ws) {
    for (auto& w : ws) std::cout << "# input " << echo_zword(w) << "\n";
}

Json inputs_json(const std::vector<ZWord>& ws) {
    Json a = Json::array();
    for (auto& w : ws) a.push_back(Json{{"word", w.k}, {"xy", xy_of(w)}});
    return a;
}

void print_zlin(const Options& g, const std::vector<ZWord>& inputs, const char* op,
                const ZLin& value) {
    if (want_json(g)) {
        Json j{{"op", op}, {"inputs", inputs_json(inputs)}, {"result", lin_json(value)}};
        std::cout << j.dump(2) << "\n";
    } else {
        echo_inputs_plain(inputs);
        std::cout << to_string(value) << "\n";
    }
}

void print_blin(const Options& g, const std::vector<BWord>& inputs, const char* op,
                const BLin& value) {
    if (want_json(g)) {
        Json ins = Json::array();
        for (auto& w : inputs) ins.push_back(Json(w.flat()));
        Json terms = Json::array();
        for (auto& [w, c] : value.terms())
            terms.push_back(Json{{"coeff", rat_str(c)}, {"word", w.flat()}});
        std::cout << Json{{"op", op}, {"inputs", ins}, {"result", {{"terms", terms}}}}.dump(2)
                  << "\n";
    } else {
        for (auto& w : inputs) std::cout << "# input " << format_bword(w) << "\n";
        std::cout << to_string(value) << "\n";
    }
}

// fixed-width table printing
void print_aligned(const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> width;
    for (auto& r : rows)
        for (size_t i = 0; i < r.size(); ++i) {
            if (width.size() <= i) width.resize(i + 1, 0);
            width[i] = std::max(width[i], r[i].size());
        }
    for (auto& r : rows) {
        std::string line;
        for (size_t i = 0; i < r.size(); ++i) {
            std::string cell = r[i];
            cell.insert(0, width[i] - cell.size(), ' ');  // right-align
            line += cell;
            if (i + 1 < r.size()) line += "  ";
        }
        std::cout << line << "\n";
    }
}

void print_delimited(const std::vector<std::vector<std::string>>& rows, char sep) {
    for (auto& r : rows) {
        for (size_t i = 0; i < r.size(); ++i) {
            if (i) std::cout << sep;
            std::cout << r[i];
        }
        std::cout << "\n";
    }
}

Space parse_space(const std::string& s) {
    if (s == "h1") return Space::H1;
    if (s == "h0") return Space::H0;
    if (s == "ge2") return Space::GE2;
    if (s == "ge2alm") return Space::GE2ALM;
    throw std::invalid_argument("unknown space '" + s + "' (h1, h0, ge2, ge2alm)");
}

std::string opt_str(const std::optional<long>& v) { return v ? std::to_string(*v) : ""; }
std::string opt_str(const std::optional<bool>& v) { return v ? (*v ? "yes" : "no") : ""; }

Json check_json(const CheckReport& r) {
    return Json{{"check", r.id},          {"max_weight", r.max_weight},
                {"instances", r.instances}, {"skipped_weights", r.skipped_weights},
                {"pass", r.pass},         {"counterexample", r.counterexample}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact word-algebra, operator, and mould calculus for double-shuffle "
        "relation spaces"};
    app.require_subcommand(1);

    Options g;
    app.add_option("-j,--threads", g.threads, "worker threads")
        ->envname("MES_THREADS")
        ->check(CLI::PositiveNumber);
    app.add_option("-o,--output", g.output, "output format")
        ->check(CLI::IsMember({"plain", "json", "tsv", "csv"}))
        ->capture_default_str();
    app.add_option("--arith", g.arith, "rank arithmetic (table, export span)")
        ->check(CLI::IsMember({"exact", "modular"}))
        ->capture_default_str();
    app.add_option("--primes", g.primes, "primes for modular certification")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    // product --op OP W1 W2
    std::string prod_op;
    std::string prod_w1, prod_w2;
    auto* prod = app.add_subcommand("product", "product of two words");
    prod->add_option("--op", prod_op, "harmonic | shuffle | harmonic_b | ds")->required();
    prod->add_option("w1", prod_w1, "left word (index letters, e.g. 3,2)")->required();
    prod->add_option("w2", prod_w2, "right word")->required();

    // apply --op OP ARGS...
    std::string apply_op;
    std::vector<std::string> apply_args;
    auto* appl = app.add_subcommand("apply", "apply an operator to words");
    appl->add_option("--op", apply_op,
                     "phi | R | delta | W | D | tau | drop1 | der | reg0-harmonic | "
                     "reg0-shuffle")
        ->required()
        // accept either separator in the regularization op names
        ->transform([](std::string s) {
            std::replace(s.begin(), s.end(), '-', '_');
            return s;
        });
    appl->add_option("args", apply_args, "word argument(s)")->expected(-1);

    // coproduct W
    std::string cop_w;
    auto* cop = app.add_subcommand("coproduct", "expansion-term coproduct of a word");
    cop->add_option("word", cop_w, "index word")->required();

    // fourier W
    std::string fou_w;
    auto* fou = app.add_subcommand("fourier",
                                   "constant-term expansion over formal g-symbols");
    fou->add_option("index", fou_w, "index word with first letter >= 2")->required();

    // table --from A --to B --family F
    int tab_from = 6, tab_to = 14;
    std::string tab_family = "both";
    auto* tab = app.add_subcommand("table", "relation-space rank table");
    tab->add_option("--from", tab_from, "first weight")->capture_default_str();
    tab->add_option("--to", tab_to, "last weight")->capture_default_str();
    tab->add_option("--family", tab_family, "R | DR | both")
        ->check(CLI::IsMember({"R", "DR", "both"}))
        ->capture_default_str();

    // dims --to K
    int dims_to = 14;
    auto* dim = app.add_subcommand("dims", "graded dimensions and conjectured quotients");
    dim->add_option("--to", dims_to, "last weight")->capture_default_str();

    // verify [--check ID] --max-weight K [--budget N]
    std::string ver_id;
    int ver_maxw = 8;
    long ver_budget = -1;
    auto* ver = app.add_subcommand("verify", "sweep a named identity for counterexamples");
    ver->add_option("--check", ver_id, "check id (omit to run the whole suite)");
    ver->add_option("--max-weight", ver_maxw, "sweep bound")->capture_default_str();
    ver->add_option("--budget", ver_budget,
                    "skip weights with more instances than this (-1 = unlimited)")
        ->capture_default_str();

    // diamond --pair U V | --word W
    std::vector<std::string> dia_pair;
    std::string dia_word;
    auto* dia = app.add_subcommand("diamond",
                                   "product / derivative defect of the depth drop");
    auto* dia_pair_opt =
        dia->add_option("--pair", dia_pair, "two words with first letter >= 2")->expected(2);
    auto* dia_word_opt =
        dia->add_option("--word", dia_word, "one word (derivative defect)");
    dia_pair_opt->excludes(dia_word_opt);

    // a2 --cutoff M --max-weight K
    int a2_cutoff = 6, a2_maxw = 5;
    auto* a2c = app.add_subcommand("a2", "truncated-sum harness");
    a2c->add_option("--cutoff", a2_cutoff, "summation bound M")->capture_default_str();
    a2c->add_option("--max-weight", a2_maxw, "sweep bound")->capture_default_str();

    // export --what {basis,matrix,span} --weight K [--space S] [--family F]
    std::string exp_what, exp_space = "ge2", exp_family = "R";
    int exp_weight = 0;
    auto* exp = app.add_subcommand("export", "machine-readable building blocks");
    exp->add_option("--what", exp_what, "basis | matrix | span")
        ->check(CLI::IsMember({"basis", "matrix", "span"}))
        ->required();
    exp->add_option("--weight", exp_weight, "weight")->required();
    exp->add_option("--space", exp_space, "basis space: h1 | h0 | ge2 | ge2alm")
        ->capture_default_str();
    exp->add_option("--family", exp_family, "matrix/span family: R | DR | drop1core")
        ->capture_default_str();

    // global options may appear after the subcommand name as well
    for (CLI::App* s : {prod, appl, cop, fou, tab, dim, ver, dia, a2c, exp})
        s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*prod) {
            if (prod_op == "harmonic_b") {
                BWord a = parse_bword(prod_w1), b = parse_bword(prod_w2);
                print_blin(g, {a, b}, "harmonic_b", harmonic_b(BLin(a), BLin(b)));
            } else {
                ZWord a = parse_zword(prod_w1), b = parse_zword(prod_w2);
                ZLin value;
                if (prod_op == "harmonic")
                    value = harmonic(ZLin(a), ZLin(b));
                else if (prod_op == "shuffle")
                    value = shuffle(ZLin(a), ZLin(b));
                else if (prod_op == "ds")
                    value = ds(a, b);
                else
                    throw std::invalid_argument("unknown product op '" + prod_op + "'");
                print_zlin(g, {a, b}, prod_op.c_str(), value);
            }
        } else if (*appl) {
            auto need = [&](size_t n) {
                if (apply_args.size() != n)
                    throw std::invalid_argument("op '" + apply_op + "' takes " +
                                                std::to_string(n) + " word argument(s)");
            };
            if (apply_op == "R") {
                need(2);
                ZWord a = parse_zword(apply_args[0]), b = parse_zword(apply_args[1]);
                print_zlin(g, {a, b}, "R", r_bracket(a, b));
            } else if (apply_op == "D" || apply_op == "tau") {
                need(1);
                BWord w = parse_bword(apply_args[0]);
                print_blin(g, {w}, apply_op.c_str(),
                           apply_op == "D" ? d_bim(w) : BLin(tau(w)));
            } else {
                need(1);
                ZWord w = parse_zword(apply_args[0]);
                ZLin value;
                if (apply_op == "phi")
                    value = phi(w);
                else if (apply_op == "delta")
                    value = delta_z(w);
                else if (apply_op == "W")
                    value = weight_op(ZLin(w));
                else if (apply_op == "drop1")
                    value = drop1(w);
                else if (apply_op == "der")
                    value = der(w);
                else if (apply_op == "reg0_harmonic")
                    value = reg0(ZLin(w), ProductKind::Harmonic);
                else if (apply_op == "reg0_shuffle")
                    value = reg0(ZLin(w), ProductKind::Shuffle);
                else
                    throw std::invalid_argument("unknown apply op '" + apply_op + "'");
                print_zlin(g, {w}, apply_op.c_str(), value);
            }
        } else if (*cop) {
            ZWord w = parse_zword(cop_w);
            Tensor t = goncharov_coproduct(w);
            if (want_json(g)) {
                Json j{{"op", "coproduct"},
                       {"inputs", inputs_json({w})},
                       {"result", tensor_json(t)}};
                std::cout << j.dump(2) << "\n";
            } else {
                echo_inputs_plain({w});
                std::cout << to_string(t) << "\n";
            }
        } else if (*fou) {
            ZWord w = parse_zword(fou_w);
            FourierExpansion fe = fourier_expansion(w);
            if (want_json(g)) {
                std::cout << fourier_json(fe).dump(2) << "\n";
            } else {
                echo_inputs_plain({w});
                for (auto& [gw, z] : fe.terms)
                    std::cout << "g" << format_zword(gw) << " : " << to_string(z) << "\n";
            }
        } else if (*tab) {
            if (tab_from > tab_to) throw std::invalid_argument("--from exceeds --to");
            bool with_r = tab_family != "DR", with_dr = tab_family != "R";
            ArithMode mode = g.arith == "modular" ? ArithMode::Modular : ArithMode::Exact;
            std::vector<TableRow> rows;
            for (int k = tab_from; k <= tab_to; ++k)
                rows.push_back(table_row(k, with_r, with_dr, mode, g.threads, g.primes));
            if (want_json(g)) {
                Json a = Json::array();
                for (auto& r : rows) {
                    Json j{{"weight", r.weight},
                           {"ambient", r.ambient},
                           {"conjectured", r.conjectured}};
                    if (r.rank_r) {
                        j["rank_R"] = *r.rank_r;
                        j["quotient_R"] = r.ambient - *r.rank_r;
                    }
                    if (r.rank_dr) {
                        j["rank_DR"] = *r.rank_dr;
                        j["quotient_DR"] = r.ambient - *r.rank_dr;
                    }
                    if (r.certified_r) j["certified_R"] = *r.certified_r;
                    if (r.certified_dr) j["certified_DR"] = *r.certified_dr;
                    a.push_back(j);
                }
                std::cout << a.dump(2) << "\n";
            } else {
                std::vector<std::vector<std::string>> cells;
                std::vector<std::string> head{"weight", "ambient", "conjectured"};
                if (with_r) {
                    head.push_back("rank_R");
                    head.push_back("quot_R");
                }
                if (with_dr) {
                    head.push_back("rank_DR");
                    head.push_back("quot_DR");
                }
                if (mode == ArithMode::Modular) {
                    if (with_r) head.push_back("cert_R");
                    if (with_dr) head.push_back("cert_DR");
                }
                cells.push_back(head);
                for (auto& r : rows) {
                    std::vector<std::string> c{std::to_string(r.weight),
                                               std::to_string(r.ambient),
                                               std::to_string(r.conjectured)};
                    if (with_r) {
                        c.push_back(opt_str(r.rank_r));
                        c.push_back(r.rank_r ? std::to_string(r.ambient - *r.rank_r) : "");
                    }
                    if (with_dr) {
                        c.push_back(opt_str(r.rank_dr));
                        c.push_back(r.rank_dr ? std::to_string(r.ambient - *r.rank_dr) : "");
                    }
                    if (mode == ArithMode::Modular) {
                        if (with_r) c.push_back(opt_str(r.certified_r));
                        if (with_dr) c.push_back(opt_str(r.certified_dr));
                    }
                    cells.push_back(c);
                }
                if (g.output == "tsv")
                    print_delimited(cells, '\t');
                else if (g.output == "csv")
                    print_delimited(cells, ',');
                else
                    print_aligned(cells);
            }
        } else if (*dim) {
            if (dims_to < 0) throw std::invalid_argument("--to must be nonnegative");
            std::vector<std::vector<std::string>> cells{{"weight", "ambient", "conjectured"}};
            Json a = Json::array();
            for (int k = 0; k <= dims_to; ++k) {
                long amb = generator_count(k), cd = conj_dim(k);
                cells.push_back(
                    {std::to_string(k), std::to_string(amb), std::to_string(cd)});
                a.push_back(Json{{"weight", k}, {"ambient", amb}, {"conjectured", cd}});
            }
            if (want_json(g))
                std::cout << a.dump(2) << "\n";
            else if (g.output == "tsv")
                print_delimited(cells, '\t');
            else if (g.output == "csv")
                print_delimited(cells, ',');
            else
                print_aligned(cells);
        } else if (*ver) {
            std::vector<std::string> ids =
                ver_id.empty() ? check_ids() : std::vector<std::string>{ver_id};
            std::vector<CheckReport> reports;
            bool all_pass = true;
            for (auto& id : ids) {
                reports.push_back(run_check(id, ver_maxw, g.threads, ver_budget));
                all_pass = all_pass && reports.back().pass;
            }
            if (want_json(g)) {
                Json a = Json::array();
                for (auto& r : reports) a.push_back(check_json(r));
                std::cout << a.dump(2) << "\n";
            } else {
                for (auto& r : reports) {
                    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ": "
                              << r.instances << " instances up to weight " << r.max_weight;
                    if (!r.skipped_weights.empty()) {
                        std::cout << " (SKIPPED weights";
                        for (int k : r.skipped_weights) std::cout << " " << k;
                        std::cout << ")";
                    }
                    std::cout << "\n";
                }
            }
            if (!all_pass) {
                for (auto& r : reports)
                    if (!r.pass) std::cerr << r.counterexample.dump() << "\n";
                return 1;
            }
        } else if (*dia) {
            DiamondReport rep;
            std::vector<ZWord> inputs;
            if (!dia_pair.empty()) {
                ZWord u = parse_zword(dia_pair[0]), v = parse_zword(dia_pair[1]);
                inputs = {u, v};
                rep = diamond_defect(u, v, g.threads);
            } else if (!dia_word.empty()) {
                ZWord w = parse_zword(dia_word);
                inputs = {w};
                rep = diamond_derivative_defect(w, g.threads);
            } else {
                throw std::invalid_argument("diamond needs --pair U V or --word W");
            }
            if (want_json(g)) {
                Json j{{"inputs", inputs_json(inputs)},
                       {"defect", lin_json(rep.defect)},
                       {"weight", rep.weight},
                       {"in_dr_span", rep.in_dr_span},
                       {"normal_form", lin_json(rep.normal_form)}};
                std::cout << j.dump(2) << "\n";
            } else {
                echo_inputs_plain(inputs);
                std::cout << "defect      = " << to_string(rep.defect) << "\n";
                std::cout << "weight      = " << rep.weight << "\n";
                std::cout << "in_dr_span  = " << (rep.in_dr_span ? "yes" : "no") << "\n";
                std::cout << "normal_form = " << to_string(rep.normal_form) << "\n";
            }
        } else if (*a2c) {
            A2Report rep = a2_harness(a2_cutoff, a2_maxw, g.threads);
            if (want_json(g)) {
                Json j{{"cutoff", rep.cutoff},
                       {"max_weight", rep.max_weight},
                       {"checks", rep.checks},
                       {"pass", rep.pass},
                       {"counterexample", rep.counterexample}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << (rep.pass ? "[PASS] " : "[FAIL] ")
                          << "truncated-sum harness: " << rep.checks
                          << " checks, cutoff " << rep.cutoff << ", max weight "
                          << rep.max_weight << "\n";
            }
            if (!rep.pass) {
                std::cerr << rep.counterexample.dump() << "\n";
                return 1;
            }
        } else if (*exp) {
            if (exp_weight < 0) throw std::invalid_argument("--weight must be nonnegative");
            if (exp_what == "basis") {
                Space sp = parse_space(exp_space);
                const auto& words = enumerate_basis(exp_weight, sp);
                if (want_json(g)) {
                    Json a = Json::array();
                    for (auto& w : words) a.push_back(Json{{"word", w.k}, {"xy", xy_of(w)}});
                    std::cout << a.dump(2) << "\n";
                } else {
                    for (auto& w : words) std::cout << echo_zword(w) << "\n";
                }
            } else {
                Family fam = parse_family(exp_family);
                if (exp_what == "matrix") {
                    ColumnIndex ci = ColumnIndex::make(exp_weight, family_space(fam));
                    std::vector<ZLin> rows;
                    detail::stream_ideal_rows(exp_weight, fam, g.threads,
                                              [&](ZLin row) { rows.push_back(std::move(row)); });
                    std::cout << rows_csv(rows, ci);
                } else {  // span
                    RelationSpace s = ideal_span(exp_weight, fam, g.threads);
                    if (want_json(g)) {
                        std::cout << relation_space_json(s).dump(2) << "\n";
                    } else {
                        std::cout << "# weight " << s.weight << ", family "
                                  << family_name(fam) << ", rank " << s.rank() << "\n";
                        for (auto& row : s.basis) std::cout << to_string(row) << "\n";
                    }
                }
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
