//! A small structural validator for the subset of JSON Schema the
//! checked-in schemas use: type, properties, required,
//! additionalProperties, items, enum, oneOf.

use serde_json::Value;

pub fn validate(schema: &Value, instance: &Value) -> Result<(), String> {
    walk(schema, instance, "$")
}

fn walk(schema: &Value, instance: &Value, path: &str) -> Result<(), String> {
    if let Some(options) = schema.get("enum").and_then(Value::as_array) {
        if !options.contains(instance) {
            return Err(format!("{path}: {instance} not in enum {options:?}"));
        }
        return Ok(());
    }

    if let Some(variants) = schema.get("oneOf").and_then(Value::as_array) {
        let matching = variants
            .iter()
            .filter(|v| walk(v, instance, path).is_ok())
            .count();
        if matching != 1 {
            return Err(format!("{path}: matched {matching} of the oneOf variants, expected 1"));
        }
        return Ok(());
    }

    if let Some(ty) = schema.get("type") {
        let allowed: Vec<&str> = match ty {
            Value::String(s) => vec![s.as_str()],
            Value::Array(a) => a.iter().filter_map(Value::as_str).collect(),
            other => return Err(format!("{path}: malformed type specifier {other}")),
        };
        if !allowed.iter().any(|t| type_matches(t, instance)) {
            return Err(format!("{path}: {instance} is not of type {allowed:?}"));
        }
    }

    if let Some(obj) = instance.as_object() {
        let props = schema.get("properties").and_then(Value::as_object);
        if let Some(required) = schema.get("required").and_then(Value::as_array) {
            for key in required.iter().filter_map(Value::as_str) {
                if !obj.contains_key(key) {
                    return Err(format!("{path}: missing required key {key:?}"));
                }
            }
        }
        for (key, value) in obj {
            let sub_path = format!("{path}.{key}");
            if let Some(sub) = props.and_then(|p| p.get(key)) {
                walk(sub, value, &sub_path)?;
            } else {
                match schema.get("additionalProperties") {
                    Some(Value::Bool(false)) => {
                        return Err(format!("{path}: unexpected key {key:?}"));
                    }
                    Some(Value::Bool(true)) | None => {}
                    Some(sub) => walk(sub, value, &sub_path)?,
                }
            }
        }
    }

    if let (Some(items), Some(array)) = (schema.get("items"), instance.as_array()) {
        for (i, element) in array.iter().enumerate() {
            walk(items, element, &format!("{path}[{i}]"))?;
        }
    }

    Ok(())
}

fn type_matches(ty: &str, instance: &Value) -> bool {
    match ty {
        "object" => instance.is_object(),
        "array" => instance.is_array(),
        "string" => instance.is_string(),
        "boolean" => instance.is_boolean(),
        "integer" => instance.is_i64() || instance.is_u64(),
        "number" => instance.is_number(),
        "null" => instance.is_null(),
        _ => false,
    }
}
