#ifndef STRIPLE_CORPUS_HPP
#define STRIPLE_CORPUS_HPP

namespace striple {

// The golden tuple corpus (every published value this project reproduces),
// embedded at build time from data/corpus.json.
const char* corpus_json_text();

} // namespace striple

#endif
