#pragma once

#include <stdexcept>

namespace fedrec {

// Base for all library errors. The CLI maps categories to exit codes:
// ConfigError -> 2, DataError -> 3, any other Error -> 4.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct DataError : Error {
    using Error::Error;
};

// data ingestion / preprocessing
struct MissingColumnError : DataError {
    using DataError::DataError;
};
struct EmptyInputError : DataError {
    using DataError::DataError;
};
struct EmptyAfterFilterError : DataError {
    using DataError::DataError;
};
struct DegenerateLabelsError : DataError {
    using DataError::DataError;
};

// model / tensor plumbing
struct LengthMismatchError : Error {
    using Error::Error;
};
struct ShapeMismatchError : Error {
    using Error::Error;
};
struct IndexOutOfRangeError : Error {
    using Error::Error;
};
struct EmptyClientError : Error {
    using Error::Error;
};
struct EmptyDatasetError : Error {
    using Error::Error;
};

// federation
struct NotEnoughClientsError : DataError {
    using DataError::DataError;
};
struct EmptyUpdatesError : Error {
    using Error::Error;
};

// boosting
struct DegenerateLeafError : Error {
    using Error::Error;
};
struct FeatureMismatchError : Error {
    using Error::Error;
};

// metrics
struct EmptyCountsError : Error {
    using Error::Error;
};
struct EmptySeriesError : Error {
    using Error::Error;
};

// reporting
struct MissingRunError : DataError {
    using DataError::DataError;
};

}  // namespace fedrec
