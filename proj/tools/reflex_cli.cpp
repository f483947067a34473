#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "reflex/report.hpp"

namespace {

int emit(const reflex::Report& rep, const std::string& out, const std::string& format) {
    std::string payload =
        format == "text" ? rep.to_text() : rep.to_json().dump(2) + "\n";
    if (out.empty()) {
        std::cout << payload;
    } else {
        std::ofstream os(out);
        if (!os) {
            std::cerr << "error: cannot write " << out << "\n";
            return 2;
        }
        os << payload;
    }
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for reflexive polytopes, toric fans and hypergeometric series checks"};
    app.require_subcommand(1);

    unsigned n = 2;
    std::string bound_str = "6";
    std::string route = "both";
    std::string out, format = "json", file;

    CLI::App* pn = app.add_subcommand("pn-verify", "run the verification pipelines for projective n-space");
    pn->add_option("--n", n, "dimension, 1..5")->required();
    pn->add_option("--bound", bound_str, "series truncation bound floor (default 6)");
    pn->add_option("--route", route, "rank route: ring, poset or both")
        ->check(CLI::IsMember({"ring", "poset", "both"}));
    pn->add_option("--out", out, "write the report to a file");
    pn->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

    CLI::App* pr = app.add_subcommand("polytope-report", "reflexivity, faces and rank data of a polytope");
    pr->add_option("--file", file, "polytope JSON file {\"vertices\": [[ints]]}")->required();
    pr->add_option("--out", out, "write the report to a file");
    pr->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

    CLI::App* sd = app.add_subcommand("series-dump", "dump the truncated series as JSON");
    sd->add_option("--n", n, "dimension, 1 or 2")->required();
    sd->add_option("--bound", bound_str, "exact truncation bound");
    sd->add_option("--out", out, "write to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        reflex::Int bound(bound_str);
        if (pn->parsed()) {
            reflex::RankRoute rr = route == "ring"    ? reflex::RankRoute::Ring
                                   : route == "poset" ? reflex::RankRoute::Poset
                                                      : reflex::RankRoute::Both;
            return emit(reflex::run_pn_verify(n, bound, rr), out, format);
        }
        if (pr->parsed()) {
            std::ifstream is(file);
            if (!is) {
                std::cerr << "error: cannot read " << file << "\n";
                return 2;
            }
            reflex::Json j = reflex::Json::parse(is);
            return emit(reflex::run_polytope_report(j), out, format);
        }
        if (sd->parsed()) {
            reflex::Json j = reflex::run_series_dump(n, bound);
            std::string payload = j.dump(2) + "\n";
            if (out.empty()) {
                std::cout << payload;
            } else {
                std::ofstream os(out);
                os << payload;
            }
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const reflex::Json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
