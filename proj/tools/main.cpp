/* main.cpp -- poshuffle command line */

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "poshuffle/characterize.hpp"
#include "poshuffle/decompose.hpp"
#include "poshuffle/errors.hpp"
#include "poshuffle/extraction.hpp"
#include "poshuffle/io.hpp"
#include "poshuffle/shuffle.hpp"
#include "poshuffle/trace_semantics.hpp"

namespace {

using namespace poshuffle;

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

bool looks_like_language(const std::string& text) {
    const auto j = nlohmann::json::parse(text, nullptr, false);
    return j.is_object() && j.contains("traces");
}

void print_poset(const Poset& p, const std::string& indent = "") {
    std::cout << indent << "events:";
    for (const EventId& e : p.events())
        std::cout << ' ' << e;
    std::cout << '\n' << indent << "cover:";
    for (const auto& [from, to] : p.hasse())
        std::cout << ' ' << from << '<' << to;
    std::cout << '\n';
}

void print_language(const Language& l) {
    for (const Word& w : l)
        std::cout << format_word(w) << '\n';
}

std::string violation_line(const UniformityViolation& v) {
    return "(" + v.a + ", " + v.b + ", " + v.c + ") operands " +
           std::to_string(v.operand_ab) + "/" + std::to_string(v.operand_c) + ": " +
           to_string(v.rel_a) + " vs " + to_string(v.rel_b);
}

LPoset load_trajectory_lposet(const std::string& path) {
    const PosetDocument doc = load_poset(path);
    if (!doc.is_labelled())
        throw SchemaError(path + ": trajectory must be a labelled poset document");
    return doc.lposet();
}

// A trajectory language: either a language document of words over "1".."n"
// or a labelled poset document, whose label words are taken.
Language load_trajectory_language(const std::string& path, const Limits& limits) {
    const std::string text = read_file(path);
    if (looks_like_language(text))
        return parse_language_document(text, path).language;
    return lang_labelled(load_trajectory_lposet(path), limits);
}

// An operand language: a language document, a plain poset (its traces) or a
// labelled poset (its label words).
Language load_operand_language(const std::string& path, const Limits& limits) {
    const std::string text = read_file(path);
    if (looks_like_language(text))
        return parse_language_document(text, path).language;
    const PosetDocument doc = parse_poset_document(text, path);
    if (doc.is_labelled())
        return lang_labelled(doc.lposet(), limits);
    return lang(doc.poset(), limits);
}

ShuffleInstance load_instance(const std::string& trajectory_path,
                              const std::vector<std::string>& operand_paths) {
    std::vector<Poset> operands;
    operands.reserve(operand_paths.size());
    for (const std::string& path : operand_paths) {
        const PosetDocument doc = load_poset(path);
        if (doc.is_labelled())
            throw SchemaError(path + ": operands must be plain poset documents");
        operands.push_back(doc.poset());
    }
    return ShuffleInstance(load_trajectory_lposet(trajectory_path), std::move(operands));
}

void print_verdict(const ShuffleVerdict& v) {
    std::cout << "single: " << (v.single ? "true" : "false") << '\n';
    if (v.result)
        print_poset(*v.result);
    if (v.witness)
        std::cout << "witness: " << format_word(*v.witness) << '\n';
    if (!v.note.empty())
        std::cout << "note: " << v.note << '\n';
    if (v.single || v.witness || v.empty_shuffle)
        std::cout << "language size: " << v.language_size << '\n';
    if (!v.violations.empty()) {
        std::cout << "lemma2 violations:\n";
        for (const UniformityViolation& violation : v.violations)
            std::cout << "  " << violation_line(violation) << '\n';
    }
}

int cmd_validate(const std::string& file) {
    const PosetDocument doc = load_poset(file);
    const Poset& p = doc.poset();
    std::cout << (doc.is_labelled() ? "lposet" : "poset") << ": " << p.size() << " events\n";
    if (doc.name)
        std::cout << "name: " << *doc.name << '\n';
    print_poset(p);
    if (doc.is_labelled()) {
        std::cout << "labels:";
        for (std::size_t a = 0; a < p.size(); ++a)
            std::cout << ' ' << p.event(a) << '=' << doc.lposet().label_at(a);
        std::cout << '\n';
    }
    return 0;
}

int cmd_lang(const std::string& file, bool count_only, const Limits& limits) {
    const PosetDocument doc = load_poset(file);
    const Language l =
        doc.is_labelled() ? lang_labelled(doc.lposet(), limits) : lang(doc.poset(), limits);
    if (count_only)
        std::cout << l.size() << '\n';
    else
        print_language(l);
    return 0;
}

int cmd_shuffle_word(const std::string& trajectory,
                     const std::vector<std::string>& operand_args) {
    const TrajectoryWord t =
        TrajectoryWord::parse(trajectory, static_cast<int>(operand_args.size()));
    std::vector<Word> ws;
    ws.reserve(operand_args.size());
    for (const std::string& arg : operand_args) {
        if (std::filesystem::exists(arg)) {
            const Language l = load_language(arg).language;
            if (l.size() != 1)
                throw SchemaError(arg + ": operand file must contain exactly one trace");
            ws.push_back(l.at(0));
        } else {
            ws.push_back(word_from_chars(arg));
        }
    }
    std::cout << format_word(shuffle_words(t, ws)) << '\n';
    return 0;
}

int cmd_shuffle_lang(const std::string& trajectory_path,
                     const std::vector<std::string>& operand_paths, const Limits& limits) {
    const Language trajectories = load_trajectory_language(trajectory_path, limits);
    std::vector<Language> operands;
    operands.reserve(operand_paths.size());
    for (const std::string& path : operand_paths)
        operands.push_back(load_operand_language(path, limits));
    print_language(shuffle_languages(trajectories, operands,
                                     static_cast<int>(operands.size()), limits));
    return 0;
}

int cmd_shuffle_poset(const std::string& trajectory_path,
                      const std::vector<std::string>& operand_paths,
                      const std::string& method, const Limits& limits) {
    const ShuffleInstance instance = load_instance(trajectory_path, operand_paths);
    if (method == "semantic" || method == "structural") {
        const ShuffleVerdict v = method == "semantic" ? shuffle_semantic(instance, limits)
                                                      : shuffle_structural(instance, limits);
        print_verdict(v);
        return v.single ? 0 : 1;
    }
    const ShuffleVerdict semantic = shuffle_semantic(instance, limits);
    const ShuffleVerdict structural = shuffle_structural(instance, limits);
    std::cout << "semantic:\n";
    print_verdict(semantic);
    std::cout << "structural:\n";
    print_verdict(structural);
    const bool agree = semantic.single == structural.single &&
                       semantic.empty_shuffle == structural.empty_shuffle &&
                       semantic.result == structural.result &&
                       (!semantic.single ||
                        semantic.language_size == structural.language_size);
    if (!agree) {
        std::cout << "DISAGREEMENT: semantic and structural verdicts differ\n";
        return 4;
    }
    std::cout << "agreement: yes\n";
    return semantic.single ? 0 : 1;
}

int cmd_extract_order(const std::string& file) {
    print_poset(reconstruct(load_language(file).language));
    return 0;
}

int cmd_is_poset_language(const std::string& file, const Limits& limits) {
    const PosetLanguageCheck check = is_poset_language(load_language(file).language, limits);
    if (check.is_poset_language) {
        std::cout << "true\n";
        return 0;
    }
    std::cout << "false\nwitness: " << format_word(*check.witness) << '\n';
    return 1;
}

int cmd_groups(const std::string& file) {
    const GroupDecomposition d = load_poset(file).poset().groups();
    for (std::size_t g = 0; g < d.groups.size(); ++g) {
        std::cout << "group " << g + 1 << ':';
        for (const EventId& e : d.groups[g])
            std::cout << ' ' << e;
        std::cout << '\n';
    }
    return 0;
}

int cmd_decompose(const std::string& file, const Limits& limits) {
    DecomposeOptions options;
    options.limits = limits;
    const PosetCover cover = decompose(load_language(file).language, options);
    std::cout << "cover size: " << cover.posets.size() << '\n';
    for (std::size_t i = 0; i < cover.posets.size(); ++i) {
        std::cout << "poset " << i + 1 << ":\n";
        print_poset(cover.posets[i], "  ");
    }
    return 0;
}

int cmd_check_lemma2(const std::string& trajectory_path,
                     const std::vector<std::string>& operand_paths,
                     const std::string& result_path) {
    const ShuffleInstance instance = load_instance(trajectory_path, operand_paths);
    const PosetDocument result = load_poset(result_path);
    const auto violations = check_lemma2(instance, result.poset());
    if (violations.empty()) {
        std::cout << "no violations\n";
        return 0;
    }
    for (const UniformityViolation& v : violations)
        std::cout << "violation: " << violation_line(v) << '\n';
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"shuffles of words, languages and posets on trajectories"};
    app.require_subcommand(1);
    std::size_t max_traces = 100000;
    app.add_option("--max-traces", max_traces, "cap on enumerated traces")
        ->capture_default_str();

    std::string file, trajectory, method = "semantic", result_path;
    std::vector<std::string> operands;
    bool count_only = false;

    auto* validate = app.add_subcommand("validate", "check and echo a poset document");
    validate->add_option("file", file)->required();

    auto* lang_cmd = app.add_subcommand("lang", "list the traces of a poset");
    lang_cmd->add_option("file", file)->required();
    lang_cmd->add_flag("--count-only", count_only, "print only the number of traces");

    auto* shuffle_word =
        app.add_subcommand("shuffle-word", "interleave words along a trajectory word");
    shuffle_word->add_option("-t,--trajectory", trajectory, "word over operand indices")
        ->required();
    shuffle_word->add_option("operands", operands, "literal words or one-trace files")
        ->required();

    auto* shuffle_lang =
        app.add_subcommand("shuffle-lang", "interleave languages along trajectories");
    shuffle_lang->add_option("-t,--trajectory", trajectory, "trajectory language file")
        ->required();
    shuffle_lang->add_option("operands", operands, "poset or language files")->required();

    auto* shuffle_poset = app.add_subcommand(
        "shuffle-poset", "decide whether a shuffle of posets is a single poset");
    shuffle_poset->add_option("-t,--trajectory", trajectory, "labelled poset file")
        ->required();
    shuffle_poset->add_option("operands", operands, "poset files")->required();
    shuffle_poset->add_option("--method", method, "semantic, structural or both")
        ->check(CLI::IsMember({"semantic", "structural", "both"}))
        ->capture_default_str();

    auto* extract =
        app.add_subcommand("extract-order", "extract the order of a trace language");
    extract->add_option("file", file)->required();

    auto* is_poset = app.add_subcommand("is-poset-language",
                                        "is the language exactly some poset's language?");
    is_poset->add_option("file", file)->required();

    auto* groups_cmd = app.add_subcommand("groups", "concurrency groups of a poset");
    groups_cmd->add_option("file", file)->required();

    auto* decompose_cmd =
        app.add_subcommand("decompose", "cover a language by maximal posets");
    decompose_cmd->add_option("file", file)->required();

    auto* check = app.add_subcommand(
        "check-lemma2", "uniform-relation check of a poset against shuffle operands");
    check->add_option("-t,--trajectory", trajectory, "labelled poset file")->required();
    check->add_option("operands", operands, "poset files")->required();
    check->add_option("--result", result_path, "poset to check")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        const Limits limits{max_traces};
        if (validate->parsed())
            return cmd_validate(file);
        if (lang_cmd->parsed())
            return cmd_lang(file, count_only, limits);
        if (shuffle_word->parsed())
            return cmd_shuffle_word(trajectory, operands);
        if (shuffle_lang->parsed())
            return cmd_shuffle_lang(trajectory, operands, limits);
        if (shuffle_poset->parsed())
            return cmd_shuffle_poset(trajectory, operands, method, limits);
        if (extract->parsed())
            return cmd_extract_order(file);
        if (is_poset->parsed())
            return cmd_is_poset_language(file, limits);
        if (groups_cmd->parsed())
            return cmd_groups(file);
        if (decompose_cmd->parsed())
            return cmd_decompose(file, limits);
        if (check->parsed())
            return cmd_check_lemma2(trajectory, operands, result_path);
    } catch (const SizeLimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 70;
    }
    return 2;
}
