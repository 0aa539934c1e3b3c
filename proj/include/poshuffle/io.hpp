/* io.hpp -- JSON documents for posets and languages, poset generation */

#ifndef POSHUFFLE_IO_HPP
#define POSHUFFLE_IO_HPP

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <variant>

#include "poshuffle/language.hpp"
#include "poshuffle/poset.hpp"

namespace poshuffle {

// A poset document: {"name"?, "events": [...], "cover": [[from,to],...],
// "labels"?: {event: label}}. With "labels" present the value is an LPoset.
struct PosetDocument {
    std::optional<std::string> name;
    std::variant<Poset, LPoset> value;

    bool is_labelled() const { return value.index() == 1; }
    const Poset& poset() const;   // underlying poset either way
    const LPoset& lposet() const; // throws std::bad_variant_access if plain

    bool operator==(const PosetDocument&) const = default;
};

// A language document: {"alphabet"?: [...], "traces": [...]}. Each trace is
// either a string (one symbol per character) or an array of symbol strings.
// Duplicate traces are rejected.
struct LanguageDocument {
    std::optional<std::vector<Symbol>> alphabet;
    Language language;

    bool operator==(const LanguageDocument&) const = default;
};

// Parsers throw ParseError (malformed JSON, with line/column) or SchemaError
// (well-formed JSON violating the document shape), plus the poset validation
// errors. `origin` names the input in messages.
PosetDocument parse_poset_document(const std::string& text, const std::string& origin);
LanguageDocument parse_language_document(const std::string& text, const std::string& origin);

PosetDocument load_poset(const std::filesystem::path& path);
LanguageDocument load_language(const std::filesystem::path& path);

// Deterministic serialization: sorted events/pairs/keys/traces, two-space
// indent, trailing newline. save(load(x)) is byte-stable.
std::string poset_document_to_json(const PosetDocument& doc);
std::string language_document_to_json(const LanguageDocument& doc);

void save_poset(const PosetDocument& doc, const std::filesystem::path& path);
void save_language(const LanguageDocument& doc, const std::filesystem::path& path);

// Streams every poset on the event sets {e1}, {e1,e2}, ..., up to
// max_events, in a fixed deterministic order. Counts by exact event count
// are 1, 3, 19, 219, 4231 for 1..5. Throws SizeLimitError when max_events
// exceeds max_allowed (default 5; override consciously, growth is severe).
void generate_posets(std::size_t max_events,
                     const std::function<void(const Poset&)>& sink,
                     std::size_t max_allowed = 5);

} // namespace poshuffle

#endif
