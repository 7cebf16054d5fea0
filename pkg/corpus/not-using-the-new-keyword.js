var Person = function (name, surname, age) {
  this.name = name;
  this.surname = surname;
  this.age = age;
};

// Invoking the constructor as a simple function
var person = Person('John', 'Foo', 27);
person // answers undefined
window.surname // answers 'Foo'
person.age // raises an error
