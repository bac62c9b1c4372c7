#pragma once

#include <stdexcept>
#include <string>

namespace alarm {

// Every failure mode named by a module contract maps to one code so callers
// (and the CLI exit-code mapping) can dispatch without string matching.
enum class Errc {
    // corpus
    duplicate_id,
    malformed_record,
    missing_field,
    // lmm
    transport,
    auth,
    protocol,
    mock_miss,
    no_logprobs,
    both_tokens_missing,
    unreadable_image,
    // identify
    bad_tau,
    // pairing
    missing_embedding,
    dimension_mismatch,
    zero_vector,
    empty_candidates,
    category_empty,
    // experience / infer
    empty_response,
    too_many_failures,
    // refset
    ops_parse,
    // evalx
    no_gold_labels,
    empty_matrix,
    // cli / pipeline
    missing_upstream,
    config,
    // synth
    spec_invalid,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

// CLI exit-code buckets: 1 config, 2 stage, 3 backend.
int exit_code_for(Errc code);

} // namespace alarm
