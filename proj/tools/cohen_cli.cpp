#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cohen/lcs.hpp"
#include "cohen/suites.hpp"
#include "cohen/text.hpp"

using nlohmann::json;

namespace {

struct Common {
    std::string ring_text = "z";
    int n = 0;
    int k = 1;
    int t = 0;
    bool json_out = false;

    cohen::Ring ring() const { return cohen::Ring::parse(ring_text); }
};

void add_common(CLI::App* sub, Common& c, bool need_n) {
    sub->add_option("--ring", c.ring_text, "coefficient ring, z or zmod:<m>")
        ->capture_default_str();
    auto* n = sub->add_option("--n", c.n, "number of generators");
    if (need_n)
        n->required();
    sub->add_option("--k", c.k, "block size")->capture_default_str();
    sub->add_flag("--json", c.json_out, "emit a json object instead of plain text");
}

int finish(const Common& c, const std::string& command, const json& inputs, const json& result,
           const std::vector<std::string>& caveats, const std::string& text_out, int code) {
    if (c.json_out) {
        json obj{{"command", command},
                 {"inputs", inputs},
                 {"result", result},
                 {"caveats", caveats}};
        std::cout << obj.dump(2) << "\n";
    } else {
        if (!text_out.empty())
            std::cout << text_out << "\n";
        for (const auto& cv : caveats)
            std::cerr << "caveat: " << cv << "\n";
    }
    return code;
}

std::vector<std::string> group_caveats(const Common& c, int k, int l = 1) {
    std::vector<std::string> cv;
    if (!cohen::representation_faithfulness_proven(c.ring(), k))
        cv.push_back("faithfulness-unproven");
    if (l >= 2)
        cv.push_back("window-projection-shift");
    return cv;
}

int run_basis(const Common& c) {
    auto basis = cohen::algebra_basis(c.n, c.k, c.t);
    std::string text;
    json monos = json::array();
    for (const auto& m : basis) {
        cohen::AlgebraElement e = cohen::AlgebraElement::zero(c.ring(), c.n, c.k);
        e.add_term(m, 1);
        std::string line = cohen::print_element(e);
        text += line + "\n";
        monos.push_back(line);
    }
    text += "count " + std::to_string(basis.size());
    json inputs{{"ring", c.ring().text()}, {"n", c.n}, {"k", c.k}, {"t", c.t}};
    json result{{"count", basis.size()}, {"monomials", monos}};
    return finish(c, "basis", inputs, result, {}, text, 0);
}

int run_expand(const Common& c, const std::string& word_text) {
    cohen::GroupWord w = cohen::parse_word(c.ring(), c.n, c.k, word_text);
    std::string out = cohen::print_element(cohen::rep(w));
    json inputs{{"ring", c.ring().text()}, {"n", c.n}, {"k", c.k}, {"word", word_text}};
    return finish(c, "expand", inputs, json{{"element", out}}, {}, out, 0);
}

int run_eq(const Common& c, const std::string& wa, const std::string& wb) {
    cohen::GroupWord a = cohen::parse_word(c.ring(), c.n, c.k, wa);
    cohen::GroupWord b = cohen::parse_word(c.ring(), c.n, c.k, wb);
    bool equal = cohen::group_equal(a, b);
    json inputs{{"ring", c.ring().text()}, {"n", c.n}, {"k", c.k}, {"w1", wa}, {"w2", wb}};
    return finish(c, "eq", inputs, json{{"equal", equal}}, group_caveats(c, c.k),
                  equal ? "true" : "false", equal ? 0 : 1);
}

int run_member(const Common& c, const std::string& kind, int l, const std::string& word_text) {
    bool member = false;
    int total = c.n;
    int k = c.k;
    int window = 1;
    if (kind == "hn") {
        cohen::GroupWord w = cohen::parse_word(c.ring(), c.n, c.k, word_text);
        member = cohen::is_member_equalizer(w);
    } else if (kind == "hln" || kind == "hlkn") {
        if (l < 1)
            throw cohen::precondition_error("--l must be >= 1");
        k = kind == "hln" ? 1 : c.k;
        total = l * c.n;
        window = l;
        cohen::GroupWord w = cohen::parse_word(c.ring(), total, k, word_text);
        member = cohen::is_member_window_equalizer(w, l, c.n);
    } else {
        throw cohen::precondition_error("unknown membership kind: " + kind);
    }
    json inputs{{"ring", c.ring().text()}, {"n", c.n},          {"k", k},
                {"kind", kind},            {"l", window},       {"generators", total},
                {"word", word_text}};
    return finish(c, "member", inputs, json{{"member", member}}, group_caveats(c, k, window),
                  member ? "true" : "false", member ? 0 : 1);
}

int run_lift(const Common& c, int to, const std::string& word_text) {
    cohen::GroupWord alpha = cohen::parse_word(c.ring(), c.n, c.k, word_text);
    cohen::GroupWord lifted = cohen::lift_equalizer(alpha, to);
    std::string out = cohen::print_word(lifted);
    json inputs{{"ring", c.ring().text()}, {"n", c.n}, {"k", c.k}, {"to", to},
                {"word", word_text}};
    return finish(c, "lift", inputs, json{{"word", out}}, group_caveats(c, c.k), out, 0);
}

int infer_dim(const std::string& input_text) {
    size_t open = input_text.find('[');
    if (open == std::string::npos)
        return 0;
    size_t close = input_text.find(']', open);
    if (close == std::string::npos)
        return 0;
    int dim = 1;
    for (size_t p = open; p < close; ++p)
        if (input_text[p] == ',')
            ++dim;
    return dim;
}

int run_eval(const Common& c, const std::string& elem_text, const std::string& input_text,
             int dim_flag) {
    if (c.k != 1)
        throw cohen::precondition_error("eval is defined for k=1");
    cohen::AlgebraElement a = cohen::parse_element(c.ring(), c.n, 1, elem_text);
    int dim = dim_flag > 0 ? dim_flag : infer_dim(input_text);
    cohen::CInput z = cohen::parse_cinput(c.ring(), dim, input_text);
    if (int(z.slots.size()) != c.n)
        throw cohen::precondition_error("input must have exactly n slots");
    std::string out = cohen::print_tensor(cohen::theta_eval(a, z));
    json inputs{{"ring", c.ring().text()}, {"n", c.n},   {"element", elem_text},
                {"input", input_text},     {"dim", dim}};
    return finish(c, "eval", inputs, json{{"value", out}}, {}, out, 0);
}

int run_ranks(const Common& c, const std::string& what) {
    long rank = 0;
    if (what == "lie") {
        rank = cohen::submodule_rank(cohen::lie_submodule(c.ring(), c.n));
    } else if (what == "gamma") {
        rank = cohen::submodule_rank(cohen::gamma_submodule(c.ring(), c.n));
    } else if (what == "primitives") {
        rank = cohen::submodule_rank(cohen::primitives_basis(c.ring(), c.n, c.t));
    } else if (what == "lcs") {
        rank = cohen::lcs_rank(c.ring(), c.n, c.k, c.t);
    } else {
        throw cohen::precondition_error("unknown rank kind: " + what);
    }
    json inputs{{"ring", c.ring().text()}, {"n", c.n}, {"k", c.k}, {"t", c.t}, {"what", what}};
    return finish(c, "ranks", inputs, json{{"rank", rank}}, {}, std::to_string(rank), 0);
}

int run_verify(const Common& c, const std::string& suite, uint64_t seed) {
    auto reports = cohen::run_suites(suite, seed);
    if (!reports)
        throw cohen::precondition_error("unknown suite: " + suite);
    bool all = true;
    long total = 0, passed = 0;
    std::string text;
    json jsuites = json::array();
    for (const auto& r : *reports) {
        json jchecks = json::array();
        for (const auto& ch : r.checks) {
            ++total;
            if (ch.pass)
                ++passed;
            else
                all = false;
            text += std::string(ch.pass ? "ok   " : "FAIL ") + r.suite + "/" + ch.name;
            if (!ch.notes.empty())
                text += " (" + ch.notes + ")";
            text += "\n";
            jchecks.push_back({{"name", ch.name}, {"pass", ch.pass}, {"notes", ch.notes}});
        }
        jsuites.push_back({{"suite", r.suite}, {"checks", jchecks}});
    }
    text += "passed " + std::to_string(passed) + "/" + std::to_string(total);
    json inputs{{"suite", suite}, {"seed", seed}};
    json result{{"pass", all}, {"suites", jsuites}};
    return finish(c, "verify", inputs, result, {}, text, all ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic in square-free tensor algebras, their unit groups, "
                 "and the associated evaluation maps"};
    app.require_subcommand(1);
    int exit_code = 0;

    Common cb;
    auto* basis = app.add_subcommand("basis", "list the graded basis monomials");
    add_common(basis, cb, true);
    basis->add_option("--t", cb.t, "degree (number of blocks)")->required();
    basis->callback([&] { exit_code = run_basis(cb); });

    Common cx;
    std::string expand_word;
    auto* expand = app.add_subcommand("expand", "image of a group word in the algebra");
    add_common(expand, cx, true);
    expand->add_option("word", expand_word, "group word")->required();
    expand->callback([&] { exit_code = run_expand(cx, expand_word); });

    Common ce;
    std::string eq_a, eq_b;
    auto* eq = app.add_subcommand("eq", "decide equality of two group words");
    add_common(eq, ce, true);
    eq->add_option("w1", eq_a, "first word")->required();
    eq->add_option("w2", eq_b, "second word")->required();
    eq->callback([&] { exit_code = run_eq(ce, eq_a, eq_b); });

    Common cm;
    std::string member_kind = "hn", member_word;
    int member_l = 2;
    auto* member = app.add_subcommand("member", "equalizer subgroup membership");
    add_common(member, cm, true);
    member->add_option("--kind", member_kind, "hn, hln or hlkn")->capture_default_str();
    member->add_option("--l", member_l, "window size for hln/hlkn")->capture_default_str();
    member->add_option("word", member_word, "group word")->required();
    member->callback([&] { exit_code = run_member(cm, member_kind, member_l, member_word); });

    Common cl;
    std::string lift_word;
    int lift_to = 0;
    auto* lift = app.add_subcommand("lift", "lift a kernel element to a higher equalizer");
    add_common(lift, cl, true);
    lift->add_option("--to", lift_to, "target generator count")->required();
    lift->add_option("word", lift_word, "group word in the restriction kernel")->required();
    lift->callback([&] { exit_code = run_lift(cl, lift_to, lift_word); });

    Common cv;
    std::string eval_elem, eval_input;
    int eval_dim = 0;
    auto* eval = app.add_subcommand("eval", "evaluate an element on a pure tensor input");
    add_common(eval, cv, true);
    eval->add_option("--dim", eval_dim, "module rank (inferred from the input by default)");
    eval->add_option("element", eval_elem, "algebra element")->required();
    eval->add_option("input", eval_input, "slots like \"1 (x) [1,0]\"")->required();
    eval->callback([&] { exit_code = run_eval(cv, eval_elem, eval_input, eval_dim); });

    Common cr;
    std::string ranks_what;
    auto* ranks = app.add_subcommand("ranks", "ranks of distinguished submodules");
    add_common(ranks, cr, true);
    ranks->add_option("--what", ranks_what, "lie, gamma, primitives or lcs")->required();
    ranks->add_option("--t", cr.t, "degree where applicable")->capture_default_str();
    ranks->callback([&] { exit_code = run_ranks(cr, ranks_what); });

    Common cs;
    std::string verify_suite;
    uint64_t verify_seed = 1;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    add_common(verify, cs, false);
    verify->add_option("--suite", verify_suite, "suite name, or all")->required();
    verify->add_option("--seed", verify_seed, "seed for randomized trials")
        ->capture_default_str();
    verify->callback([&] { exit_code = run_verify(cs, verify_suite, verify_seed); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const cohen::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
