#pragma once

#include <stdexcept>
#include <string>

namespace pkgmine {

class error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Registry / network layer.
class invalid_name_error : public error {
  public:
    using error::error;
};
class fetch_error : public error {
  public:
    using error::error;
};
class integrity_error : public error {
  public:
    using error::error;
};
// Malformed documents (registry JSON, classifier labels, rule files).
class parse_error : public error {
  public:
    using error::error;
};
class malformed_label_error : public parse_error {
  public:
    using parse_error::parse_error;
};

// Archive layer. Carries package/release identity in the message when the
// caller attaches it; scans skip the item and continue.
class archive_error : public error {
  public:
    using error::error;
};
class lookup_error : public error {
  public:
    using error::error;
};

// Statistics preconditions.
class undefined_rate_error : public error {
  public:
    using error::error;
};
class undefined_stat_error : public error {
  public:
    using error::error;
};
class empty_series_error : public error {
  public:
    using error::error;
};

// Datastore.
class store_error : public error {
  public:
    using error::error;
};
class foreign_key_error : public store_error {
  public:
    using store_error::store_error;
};
class catalog_error : public store_error {
  public:
    using store_error::store_error;
};
class schema_mismatch_error : public store_error {
  public:
    using store_error::store_error;
};

// CLI / configuration.
class usage_error : public error {
  public:
    using error::error;
};

} // namespace pkgmine
