/* io.cpp -- JSON documents and exhaustive poset generation */

#include "poshuffle/io.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

#include "poshuffle/errors.hpp"

namespace poshuffle {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void parse_failure(const std::string& text, const std::string& origin,
                                std::size_t byte) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    throw ParseError(origin + ": malformed JSON at line " + std::to_string(line) +
                         ", column " + std::to_string(column),
                     line, column);
}

json parse_json(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        parse_failure(text, origin, e.byte);
    }
}

void require_keys(const json& j, const std::string& origin,
                  std::initializer_list<const char*> allowed) {
    if (!j.is_object())
        throw SchemaError(origin + ": document must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (std::find_if(allowed.begin(), allowed.end(),
                         [&](const char* a) { return key == a; }) == allowed.end())
            throw SchemaError(origin + ": unknown field '" + key + "'");
    }
}

std::vector<std::string> string_array(const json& j, const std::string& origin,
                                      const std::string& field) {
    if (!j.is_array())
        throw SchemaError(origin + ": field '" + field + "' must be an array of strings");
    std::vector<std::string> out;
    out.reserve(j.size());
    for (const auto& entry : j) {
        if (!entry.is_string())
            throw SchemaError(origin + ": field '" + field + "' must be an array of strings");
        out.push_back(entry.get<std::string>());
    }
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

const Poset& PosetDocument::poset() const {
    if (const auto* p = std::get_if<Poset>(&value))
        return *p;
    return std::get<LPoset>(value).poset();
}

const LPoset& PosetDocument::lposet() const { return std::get<LPoset>(value); }

PosetDocument parse_poset_document(const std::string& text, const std::string& origin) {
    const json j = parse_json(text, origin);
    require_keys(j, origin, {"name", "events", "cover", "labels"});
    if (!j.contains("events"))
        throw SchemaError(origin + ": missing field 'events'");
    if (!j.contains("cover"))
        throw SchemaError(origin + ": missing field 'cover'");

    PosetDocument doc;
    if (j.contains("name")) {
        if (!j["name"].is_string())
            throw SchemaError(origin + ": field 'name' must be a string");
        doc.name = j["name"].get<std::string>();
    }

    const std::vector<EventId> events = string_array(j["events"], origin, "events");
    std::vector<std::pair<EventId, EventId>> cover;
    if (!j["cover"].is_array())
        throw SchemaError(origin + ": field 'cover' must be an array of [from, to] pairs");
    for (const auto& entry : j["cover"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
            !entry[1].is_string())
            throw SchemaError(origin + ": field 'cover' must be an array of [from, to] pairs");
        cover.emplace_back(entry[0].get<std::string>(), entry[1].get<std::string>());
    }
    Poset p = Poset::from_cover(events, cover);

    if (j.contains("labels")) {
        if (!j["labels"].is_object())
            throw SchemaError(origin + ": field 'labels' must be an object");
        std::map<EventId, std::string> labels;
        for (const auto& [key, value] : j["labels"].items()) {
            if (!value.is_string())
                throw SchemaError(origin + ": label of '" + key + "' must be a string");
            labels[key] = value.get<std::string>();
        }
        doc.value = LPoset::from(std::move(p), labels);
    } else {
        doc.value = std::move(p);
    }
    return doc;
}

LanguageDocument parse_language_document(const std::string& text, const std::string& origin) {
    const json j = parse_json(text, origin);
    require_keys(j, origin, {"alphabet", "traces"});
    if (!j.contains("traces"))
        throw SchemaError(origin + ": missing field 'traces'");
    if (!j["traces"].is_array() || j["traces"].empty())
        throw SchemaError(origin + ": field 'traces' must be a nonempty array");

    LanguageDocument doc;
    std::set<Word> seen;
    std::vector<Word> words;
    for (const auto& entry : j["traces"]) {
        Word w;
        if (entry.is_string()) {
            w = word_from_chars(entry.get<std::string>());
        } else if (entry.is_array()) {
            for (const auto& sym : entry) {
                if (!sym.is_string())
                    throw SchemaError(origin + ": trace symbols must be strings");
                w.push_back(sym.get<std::string>());
            }
        } else {
            throw SchemaError(origin +
                              ": each trace must be a string or an array of symbol strings");
        }
        if (!seen.insert(w).second)
            throw SchemaError(origin + ": duplicate trace '" + format_word(w) + "'");
        words.push_back(std::move(w));
    }

    if (j.contains("alphabet")) {
        std::vector<Symbol> alphabet = string_array(j["alphabet"], origin, "alphabet");
        std::sort(alphabet.begin(), alphabet.end());
        for (std::size_t i = 0; i + 1 < alphabet.size(); ++i)
            if (alphabet[i] == alphabet[i + 1])
                throw SchemaError(origin + ": duplicate alphabet symbol '" + alphabet[i] +
                                  "'");
        for (const Word& w : words)
            for (const Symbol& s : w)
                if (!std::binary_search(alphabet.begin(), alphabet.end(), s))
                    throw SchemaError(origin + ": trace symbol '" + s +
                                      "' is not in the alphabet");
        doc.alphabet = std::move(alphabet);
    }
    doc.language = Language(std::move(words));
    return doc;
}

PosetDocument load_poset(const std::filesystem::path& path) {
    return parse_poset_document(read_file(path), path.string());
}

LanguageDocument load_language(const std::filesystem::path& path) {
    return parse_language_document(read_file(path), path.string());
}

std::string poset_document_to_json(const PosetDocument& doc) {
    const Poset& p = doc.poset();
    ordered_json j;
    if (doc.name)
        j["name"] = *doc.name;
    j["events"] = p.events();
    auto cover = ordered_json::array();
    for (const auto& [from, to] : p.hasse())
        cover.push_back({from, to});
    j["cover"] = std::move(cover);
    if (doc.is_labelled()) {
        auto labels = ordered_json::object();
        for (std::size_t a = 0; a < p.size(); ++a)
            labels[p.event(a)] = doc.lposet().label_at(a); // events are sorted
        j["labels"] = std::move(labels);
    }
    return j.dump(2) + "\n";
}

std::string language_document_to_json(const LanguageDocument& doc) {
    ordered_json j;
    if (doc.alphabet)
        j["alphabet"] = *doc.alphabet;
    bool single = true;
    for (const Word& w : doc.language)
        for (const Symbol& s : w)
            single = single && s.size() == 1;
    auto traces = ordered_json::array();
    for (const Word& w : doc.language) {
        if (single) {
            std::string flat;
            for (const Symbol& s : w)
                flat += s;
            traces.push_back(flat);
        } else {
            traces.push_back(w);
        }
    }
    j["traces"] = std::move(traces);
    return j.dump(2) + "\n";
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write '" + path.string() + "'");
    out << text;
}

} // namespace

void save_poset(const PosetDocument& doc, const std::filesystem::path& path) {
    write_file(path, poset_document_to_json(doc));
}

void save_language(const LanguageDocument& doc, const std::filesystem::path& path) {
    write_file(path, language_document_to_json(doc));
}

void generate_posets(std::size_t max_events, const std::function<void(const Poset&)>& sink,
                     std::size_t max_allowed) {
    if (max_events > max_allowed)
        throw SizeLimitError("poset generation capped at " + std::to_string(max_allowed) +
                             " events, asked for " + std::to_string(max_events));
    if (max_events > 9)
        throw SizeLimitError("poset generation supports at most 9 events");

    for (std::size_t k = 1; k <= max_events; ++k) {
        std::vector<EventId> events;
        for (std::size_t i = 1; i <= k; ++i)
            events.push_back("e" + std::to_string(i));

        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                pairs.emplace_back(i, j);

        // Ternary digit per unordered pair: unrelated, i<j, or j<i; keep the
        // transitive assignments.
        std::vector<int> digit(pairs.size(), 0);
        std::vector<std::uint16_t> row(k);
        while (true) {
            for (std::size_t i = 0; i < k; ++i)
                row[i] = static_cast<std::uint16_t>(1u << i);
            for (std::size_t q = 0; q < pairs.size(); ++q) {
                if (digit[q] == 1)
                    row[pairs[q].first] |= 1u << pairs[q].second;
                else if (digit[q] == 2)
                    row[pairs[q].second] |= 1u << pairs[q].first;
            }
            bool transitive = true;
            for (std::size_t i = 0; i < k && transitive; ++i)
                for (std::size_t j = 0; j < k; ++j) {
                    if (i == j || !(row[i] & (1u << j)))
                        continue;
                    if (row[j] & ~row[i]) {
                        transitive = false;
                        break;
                    }
                }
            if (transitive) {
                std::vector<char> leq(k * k, 0);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        leq[i * k + j] = (row[i] >> j) & 1;
                const auto p = Poset::from_closed_matrix(events, std::move(leq));
                sink(*p);
            }
            std::size_t q = 0;
            while (q < pairs.size() && ++digit[q] == 3)
                digit[q++] = 0;
            if (q == pairs.size())
                break;
        }
    }
}

} // namespace poshuffle
